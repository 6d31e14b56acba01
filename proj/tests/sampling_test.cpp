// Copyright 2026 The Grasscode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grasscode/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/random_stream.hpp"
#include "support/chart_average.hpp"
#include "support/oracles.hpp"
#include "support/stats.hpp"

namespace grasscode {
namespace {

using std::numbers::pi;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no grasscode::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(SampleUniformTest, SamplesAreValidPoints) {
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) {
    const GrassmannPoint a = sample_uniform(7, 3, rng);
    ASSERT_EQ(a.ambient_dim(), 7);
    ASSERT_EQ(a.subspace_dim(), 3);
    ASSERT_LE(orthonormality_residual(a.basis()), 1e-12);
  }
}

TEST(SampleUniformTest, InvalidDimensions) {
  RandomStream rng(1);
  EXPECT_EQ(code_of([&] { sample_uniform(3, 2, rng); }), ErrorCode::kInvalidDimensions);
  EXPECT_EQ(code_of([&] { sample_uniform(4, 0, rng); }), ErrorCode::kInvalidDimensions);
}

TEST(SampleUniformTest, FixedSeedIsBitwiseReproducible) {
  RandomStream a(123);
  RandomStream b(123);
  for (int i = 0; i < 20; ++i) ASSERT_EQ(sample_uniform(6, 2, a).basis(), sample_uniform(6, 2, b).basis());
}

TEST(SampleUniformTest, MeanChordalProductAgainstFixedPoint) {
  RandomStream rng(2024);
  const GrassmannPoint fixed = orthonormalize(testing::unit_columns(10, {0, 1}));
  std::vector<double> xs(100000);
  for (double& x : xs) x = chordal_product(sample_uniform(10, 2, rng), fixed);
  const auto s = testing::sample_mean(xs);
  EXPECT_NEAR(s.mean, 28.0 / 45.0, 3 * s.standard_error);
}

TEST(SampleUniformTest, UnitaryInvarianceKolmogorovSmirnov) {
  RandomStream rng(77);
  const int t = 6;
  const int m = 2;
  const ComplexMatrix u = testing::random_unitary(t, rng);
  const GrassmannPoint fixed = sample_uniform(t, m, rng);
  const std::size_t n = 10000;
  std::vector<double> plain(n);
  std::vector<double> rotated(n);
  for (std::size_t i = 0; i < n; ++i) {
    plain[i] = chordal_product(sample_uniform(t, m, rng), fixed);
    const GrassmannPoint s = sample_uniform(t, m, rng);
    rotated[i] = chordal_product(GrassmannPoint::from_orthonormal(u * s.basis()), fixed);
  }
  EXPECT_LT(testing::ks_two_sample(plain, rotated), testing::ks_critical_1pct(n, n));
}

TEST(VolumeTest, KnownValues) {
  EXPECT_NEAR(grassmannian_volume(2, 1), pi, 1e-14);
  EXPECT_NEAR(grassmannian_volume(4, 2), std::pow(pi, 4) / 12.0, 1e-12);
  for (int t = 1; t <= 8; ++t) EXPECT_NEAR(grassmannian_volume(t, t), 1.0, 1e-15);
  EXPECT_EQ(grassmannian_volume_coefficient(4, 2), Rational(1, 12));
  EXPECT_EQ(grassmannian_volume_coefficient(2, 1), Rational(1));
  EXPECT_EQ(grassmannian_volume_coefficient(5, 5), Rational(1));
}

TEST(VolumeTest, ProjectiveSpaceAndLogDomain) {
  // Gr(1, C^T) is CP^{T-1} with volume pi^{T-1} / (T-1)!.
  for (int t = 2; t <= 12; ++t) {
    EXPECT_NEAR(grassmannian_volume(t, 1), std::pow(pi, t - 1) / std::tgamma(t), 1e-12 * std::pow(pi, t));
  }
  EXPECT_NEAR(log_grassmannian_volume(10, 3), std::log(grassmannian_volume(10, 3)), 1e-12);
  EXPECT_TRUE(std::isfinite(log_grassmannian_volume(400, 20)));
  EXPECT_EQ(code_of([] { grassmannian_volume(3, 4); }), ErrorCode::kInvalidDimensions);
  EXPECT_EQ(code_of([] { grassmannian_volume(3, 0); }), ErrorCode::kInvalidDimensions);
}

TEST(VolumeTest, DualityInM) {
  // Gr(M, C^T) and Gr(T - M, C^T) are isometric.
  for (int t = 2; t <= 9; ++t) {
    for (int m = 1; m < t; ++m) {
      EXPECT_EQ(grassmannian_volume_coefficient(t, m), grassmannian_volume_coefficient(t, t - m));
    }
  }
}

TEST(AffineChartTest, EmbeddedTailRoundTrip) {
  RandomStream rng(3);
  for (auto [t, m] : {std::pair{2, 1}, {4, 2}, {7, 3}}) {
    const ComplexMatrix tail0 = rng.complex_gaussian(t - m, m);
    ComplexMatrix raw(t, m);
    raw.topRows(m) = ComplexMatrix::Identity(m, m);
    raw.bottomRows(t - m) = tail0;
    const AffineChartPoint chart = to_affine_chart(orthonormalize(raw));
    EXPECT_LE((chart.tail() - tail0).cwiseAbs().maxCoeff(), 1e-10);
    const GrassmannPoint back = from_affine_chart(chart);
    EXPECT_LE((back.projector() - orthonormalize(raw).projector()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(AffineChartTest, SingularTopBlock) {
  const GrassmannPoint e2 = orthonormalize(testing::unit_column(2, 1));
  EXPECT_EQ(code_of([&] { to_affine_chart(e2); }), ErrorCode::kChartSingular);
}

TEST(AffineChartTest, DiagonalLine) {
  ComplexMatrix v(2, 1);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const AffineChartPoint chart = to_affine_chart(orthonormalize(v));
  ASSERT_EQ(chart.tail().rows(), 1);
  EXPECT_NEAR(std::abs(chart.tail()(0, 0) - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(ChartDensityTest, PointValues) {
  EXPECT_NEAR(chart_density(AffineChartPoint(2, ComplexMatrix::Zero(1, 1))), 1.0 / pi, 1e-15);
  ComplexMatrix unit(1, 1);
  unit(0, 0) = Complex(0.6, 0.8);
  EXPECT_NEAR(chart_density(AffineChartPoint(2, unit)), 1.0 / (4.0 * pi), 1e-15);
  EXPECT_NEAR(log_chart_density(AffineChartPoint(2, unit)), -std::log(4.0 * pi), 1e-14);
}

TEST(ChartDensityTest, PolarQuadratureOverPlaneIsOne) {
  // Radial integrand 2 pi r f(r) on [0, 1e3].
  auto radial = [](double r) {
    ComplexMatrix a(1, 1);
    a(0, 0) = r;
    return 2.0 * pi * r * chart_density(AffineChartPoint(2, a));
  };
  const double total = testing::integrate(radial, 0.0, 1.0) + testing::integrate(radial, 1.0, 1e3);
  EXPECT_NEAR(total, 1.0, 1e-4);
}

TEST(ChartDensityTest, UnitaryInvariantInTail) {
  // Density depends on the tail only through its singular values.
  RandomStream rng(4);
  const ComplexMatrix tail = rng.complex_gaussian(3, 2);
  const ComplexMatrix u = testing::random_unitary(3, rng);
  const ComplexMatrix v = testing::random_unitary(2, rng);
  EXPECT_NEAR(log_chart_density(AffineChartPoint(5, tail)),
              log_chart_density(AffineChartPoint(5, u * tail * v)), 1e-12);
}

void check_chart_consistency(int t, int m, std::uint64_t seed) {
  RandomStream rng(seed);
  const GrassmannPoint fixed = sample_uniform(t, m, rng);
  const std::size_t n = 100000;
  const auto uniform_mean = testing::uniform_average(t, m, fixed, rng, n);
  const auto chart_mean = testing::chart_weighted_average(t, m, fixed, rng, n);
  const double sigma = std::hypot(uniform_mean.standard_error, chart_mean.standard_error);
  EXPECT_NEAR(uniform_mean.mean, chart_mean.mean, 3 * sigma)
      << "(T, M) = (" << t << ", " << m << ")";
}

TEST(ChartDensityTest, ChartAverageMatchesUniformSamplingLines) { check_chart_consistency(2, 1, 31); }

TEST(ChartDensityTest, ChartAverageMatchesUniformSamplingPlanes) { check_chart_consistency(4, 2, 32); }

}  // namespace
}  // namespace grasscode
