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

#include "grasscode/pep.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "grasscode/bounds.hpp"
#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/random_stream.hpp"
#include "grasscode/sampling.hpp"
#include "support/oracles.hpp"
#include "support/stats.hpp"

namespace grasscode {
namespace {

using testing::unit_column;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no grasscode::Error thrown";
  return ErrorCode::kInvalidArgument;
}

GrassmannPoint e(int t, int k) { return orthonormalize(unit_column(t, k)); }

TEST(TransmitTest, ZeroNoiseStaysInSignalSpace) {
  RandomStream rng(1);
  const ChannelConfig cfg{6, 2, 3, 10.0};
  const GrassmannPoint x = sample_uniform(6, 2, rng);
  const ComplexMatrix h = rng.complex_gaussian(2, 3);
  const ComplexMatrix y = transmit_with(x, cfg, h, ComplexMatrix::Zero(6, 3));
  EXPECT_EQ(y, x.basis() * h);
  const ComplexMatrix outside = (ComplexMatrix::Identity(6, 6) - x.projector()) * y;
  EXPECT_LE(outside.norm(), 1e-13);
}

TEST(TransmitTest, ShapeAndMismatch) {
  RandomStream rng(2);
  const ChannelConfig cfg{5, 2, 4, 3.0};
  const GrassmannPoint x = sample_uniform(5, 2, rng);
  const ComplexMatrix y = transmit(x, cfg, rng);
  EXPECT_EQ(y.rows(), 5);
  EXPECT_EQ(y.cols(), 4);
  const GrassmannPoint wrong = sample_uniform(6, 2, rng);
  EXPECT_EQ(code_of([&] { transmit(wrong, cfg, rng); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { transmit_with(x, cfg, ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(5, 4)); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { transmit(x, ChannelConfig{5, 2, 4, 0.0}, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { transmit(x, ChannelConfig{5, 2, 0, 1.0}, rng); }),
            ErrorCode::kInvalidArgument);
}

TEST(TransmitTest, NoiseScaleConvention) {
  const ChannelConfig cfg{4, 1, 2, 10.0};
  EXPECT_NEAR(cfg.noise_scale(), std::sqrt(1.0 / 40.0), 1e-16);
}

TEST(TransmitTest, ReceivedEnergy) {
  RandomStream rng(3);
  const ChannelConfig cfg{4, 1, 2, 10.0};
  const GrassmannPoint x = sample_uniform(4, 1, rng);
  std::vector<double> energy(10000);
  for (double& v : energy) v = transmit(x, cfg, rng).squaredNorm();
  const auto s = testing::sample_mean(energy);
  EXPECT_NEAR(s.mean, 2.2, 3 * s.standard_error);
}

TEST(MlDecodeTest, NoiselessDecodingIsExact) {
  RandomStream rng(4);
  std::vector<GrassmannPoint> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(sample_uniform(6, 2, rng));
  const Code code(pts);
  const ChannelConfig cfg{6, 2, 2, 1.0};
  for (int round = 0; round < 20; ++round) {
    for (std::size_t i = 0; i < code.size(); ++i) {
      const ComplexMatrix y =
          transmit_with(code[i], cfg, rng.complex_gaussian(2, 2), ComplexMatrix::Zero(6, 2));
      ASSERT_EQ(ml_decode(y, code), i);
    }
  }
}

TEST(MlDecodeTest, CoordinateLines) {
  const Code code({e(2, 0), e(2, 1)});
  EXPECT_EQ(ml_decode(unit_column(2, 0), code), 0u);
  EXPECT_EQ(ml_decode(unit_column(2, 1), code), 1u);
}

TEST(MlDecodeTest, TiesGoToLowestIndex) {
  ComplexMatrix y(2, 1);
  y << 1.0, 1.0;
  EXPECT_EQ(ml_decode(y, Code({e(2, 0), e(2, 1)})), 0u);
  EXPECT_EQ(ml_decode(y, Code({e(2, 1), e(2, 0)})), 0u);
  ComplexMatrix z(3, 1);
  z << 0.0, 2.0, 2.0;
  EXPECT_EQ(ml_decode(z, Code({e(3, 0), e(3, 2), e(3, 1)})), 1u);
}

TEST(MlDecodeTest, RowMismatch) {
  EXPECT_EQ(code_of([] { ml_decode(ComplexMatrix::Zero(3, 1), Code({e(2, 0), e(2, 1)})); }),
            ErrorCode::kDimensionMismatch);
}

TEST(MlDecodeTest, InvariantUnderRightUnitaries) {
  RandomStream rng(5);
  std::vector<GrassmannPoint> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(sample_uniform(5, 2, rng));
  const Code code(pts);
  const ChannelConfig cfg{5, 2, 3, 2.0};
  for (int c = 0; c < 200; ++c) {
    const ComplexMatrix y = transmit(code[c % 5], cfg, rng);
    const ComplexMatrix u = testing::random_unitary(3, rng);
    ASSERT_EQ(ml_decode(y * u, code), ml_decode(y, code));
  }
}

TEST(AsymptoticPepTest, FormulaStructure) {
  const GrassmannPoint a = e(2, 0);
  const GrassmannPoint b = e(2, 1);
  EXPECT_NEAR(asymptotic_pep(a, b, 1, 100.0), 0.005, 1e-17);
  for (double rho : {2.0, 10.0, 1e4}) EXPECT_NEAR(asymptotic_pep(a, b, 1, rho) * rho, 0.5, 1e-14);

  RandomStream rng(6);
  const GrassmannPoint x = sample_uniform(8, 2, rng);
  const GrassmannPoint y = sample_uniform(8, 2, rng);
  const double d = chordal_product(x, y);
  for (int n : {1, 2, 3}) {
    const double want = union_bound_constant(8, 2, n) * std::pow(7.0, -2.0 * n) * std::pow(d, -n);
    EXPECT_NEAR(asymptotic_pep(x, y, n, 7.0) / want, 1.0, 1e-13);
  }

  // Halving the chordal product multiplies the value by 2^N.
  ComplexMatrix v(2, 1);
  v << std::cos(std::asin(std::sqrt(0.5))), std::sqrt(0.5);
  const GrassmannPoint half = orthonormalize(v);
  for (int n : {1, 2, 4}) {
    EXPECT_NEAR(asymptotic_pep(a, half, n, 9.0) / asymptotic_pep(a, b, n, 9.0), std::pow(2.0, n),
                1e-12);
  }
  EXPECT_EQ(code_of([&] { asymptotic_pep(a, a, 1, 10.0); }), ErrorCode::kIntersectingSubspaces);
}

TEST(EstimatePepTest, VanishesAtVeryHighSnr) {
  const ChannelConfig cfg{2, 1, 1, 1e6};
  const PepEstimate est = estimate_pep(e(2, 0), e(2, 1), cfg, 10000, RandomStream(7));
  EXPECT_EQ(est.trials, 10000);
  EXPECT_LE(est.p_hat, 1e-2);
}

TEST(EstimatePepTest, ReproducibleAndThreadIndependent) {
  RandomStream rng(8);
  const GrassmannPoint a = sample_uniform(4, 1, rng);
  const GrassmannPoint b = sample_uniform(4, 1, rng);
  const ChannelConfig cfg{4, 1, 1, 5.0};
  const SimulationOptions one{.threads = 1, .shard_trials = 1000};
  const SimulationOptions four{.threads = 4, .shard_trials = 1000};
  const PepEstimate x = estimate_pep(a, b, cfg, 20000, RandomStream(99), one);
  const PepEstimate y = estimate_pep(a, b, cfg, 20000, RandomStream(99), four);
  const PepEstimate z = estimate_pep(a, b, cfg, 20000, RandomStream(99), one);
  EXPECT_EQ(x.errors, y.errors);
  EXPECT_EQ(x.errors, z.errors);
  EXPECT_EQ(x.p_hat, z.p_hat);
  EXPECT_GT(x.errors, 0);
}

TEST(EstimatePepTest, SymmetricInTheTwoCodewords) {
  RandomStream rng(9);
  const GrassmannPoint a = sample_uniform(6, 2, rng);
  const GrassmannPoint b = sample_uniform(6, 2, rng);
  const ChannelConfig cfg{6, 2, 1, 3.0};
  const PepEstimate ab = estimate_pep(a, b, cfg, 200000, RandomStream(10));
  const PepEstimate ba = estimate_pep(b, a, cfg, 200000, RandomStream(11));
  const double sigma = std::hypot(ab.standard_error, ba.standard_error);
  EXPECT_NEAR(ab.p_hat, ba.p_hat, 3 * sigma);
}

TEST(EstimatePepTest, ExactLineErrorRate) {
  // For orthogonal lines in C^2 with N = 1 the error probability is
  // 1 / (2 (rho + 1)).
  const ChannelConfig cfg{2, 1, 1, 4.0};
  const PepEstimate est = estimate_pep(e(2, 0), e(2, 1), cfg, 200000, RandomStream(12));
  EXPECT_NEAR(est.p_hat, 0.1, 3 * est.standard_error);
}

TEST(EstimatePepTest, RatioBracketAtHundred) {
  const ChannelConfig cfg{2, 1, 1, 100.0};
  const PepEstimate est = estimate_pep(e(2, 0), e(2, 1), cfg, 200000, RandomStream(13));
  const double ratio = est.p_hat / asymptotic_pep(e(2, 0), e(2, 1), 1, 100.0);
  EXPECT_GE(ratio, 0.5);
  EXPECT_LE(ratio, 2.0);
}

TEST(EstimatePepTest, ZeroErrorsReportUpperBound) {
  const ChannelConfig cfg{2, 1, 1, 1e12};
  const PepEstimate est = estimate_pep(e(2, 0), e(2, 1), cfg, 1000, RandomStream(14));
  EXPECT_EQ(est.errors, 0);
  EXPECT_FALSE(est.measurable);
  // Clopper-Pearson with no events: 1 - 0.05^{1/n}.
  EXPECT_NEAR(est.upper_bound_95, 1.0 - std::pow(0.05, 1.0 / 1000.0), 1e-12);
}

TEST(EstimatePepTest, UpperBoundCoversEstimate) {
  const ChannelConfig cfg{2, 1, 1, 2.0};
  const PepEstimate est = estimate_pep(e(2, 0), e(2, 1), cfg, 5000, RandomStream(15));
  EXPECT_TRUE(est.measurable);
  EXPECT_GT(est.upper_bound_95, est.p_hat);
  EXPECT_LT(est.upper_bound_95, est.p_hat + 4 * est.standard_error);
}

TEST(EstimatePepTest, Errors) {
  const ChannelConfig cfg{2, 1, 1, 10.0};
  EXPECT_EQ(code_of([&] { estimate_pep(e(2, 0), e(2, 0), cfg, 10, RandomStream(1)); }),
            ErrorCode::kIntersectingSubspaces);
  EXPECT_EQ(code_of([&] { estimate_pep(e(2, 0), e(2, 1), cfg, 0, RandomStream(1)); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { estimate_pep(e(3, 0), e(3, 1), cfg, 10, RandomStream(1)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(BlockErrorTest, BelowUnionBoundWithCodeEnergy) {
  RandomStream rng(16);
  std::vector<GrassmannPoint> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(sample_uniform(4, 1, rng));
  const Code code(pts);
  for (double rho : {10.0, 30.0}) {
    const ChannelConfig cfg{4, 1, 1, rho};
    const PepEstimate est = estimate_block_error(code, cfg, 100000, RandomStream(17));
    const double bound = union_bound({4, 1, 1, 4, rho}, code_energy(code, 1).value);
    EXPECT_LE(est.p_hat, bound + 3 * est.standard_error) << "rho " << rho;
  }
}

}  // namespace
}  // namespace grasscode
