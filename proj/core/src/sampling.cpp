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
#include <string>

#include "grasscode/errors.hpp"

namespace grasscode {
namespace {

void check_volume_dimensions(int t, int m) {
  if (m < 1 || m > t) {
    throw Error(ErrorCode::kInvalidDimensions,
                "volume needs 1 <= M <= T, got T=" + std::to_string(t) + ", M=" + std::to_string(m));
  }
}

constexpr int kExactVolumeLimit = 64;

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace

GrassmannPoint sample_uniform(int ambient_dim, int subspace_dim, RandomStream& rng) {
  check_dimensions(ambient_dim, subspace_dim);
  // A Gaussian matrix has full rank with probability one; retry covers the
  // measure-zero event anyway.
  for (;;) {
    ComplexMatrix raw = rng.complex_gaussian(ambient_dim, subspace_dim);
    try {
      return orthonormalize(raw);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRankDeficient) throw;
    }
  }
}

AffineChartPoint::AffineChartPoint(int ambient_dim, ComplexMatrix tail)
    : ambient_dim_(ambient_dim), tail_(std::move(tail)) {
  if (tail_.cols() < 1 || tail_.rows() + tail_.cols() != ambient_dim_) {
    throw Error(ErrorCode::kInvalidDimensions, "chart tail must be (T - M) x M with M >= 1");
  }
}

AffineChartPoint to_affine_chart(const GrassmannPoint& point, const Tolerances& tol) {
  const int t = point.ambient_dim();
  const int m = point.subspace_dim();
  const ComplexMatrix top = point.basis().topRows(m);
  const ComplexMatrix bottom = point.basis().bottomRows(t - m);

  const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(top).singularValues();
  if (!(s(m - 1) >= tol.chart_singular)) {
    throw Error(ErrorCode::kChartSingular, "top block of the representative is singular");
  }
  // tail * top = bottom.
  ComplexMatrix tail = top.transpose().partialPivLu().solve(bottom.transpose()).transpose();
  return AffineChartPoint(t, std::move(tail));
}

GrassmannPoint from_affine_chart(const AffineChartPoint& chart) {
  const int m = chart.subspace_dim();
  ComplexMatrix embedded(chart.ambient_dim(), m);
  embedded.topRows(m) = ComplexMatrix::Identity(m, m);
  embedded.bottomRows(chart.ambient_dim() - m) = chart.tail();
  return orthonormalize(embedded);
}

double log_chart_density(const AffineChartPoint& chart) {
  const int m = chart.subspace_dim();
  const ComplexMatrix gram =
      ComplexMatrix::Identity(m, m) + chart.tail().adjoint() * chart.tail();
  const Eigen::LLT<ComplexMatrix> llt(gram);
  double log_det = 0.0;
  for (int k = 0; k < m; ++k) log_det += 2.0 * std::log(llt.matrixL()(k, k).real());
  return -log_grassmannian_volume(chart.ambient_dim(), m) - chart.ambient_dim() * log_det;
}

double chart_density(const AffineChartPoint& chart) { return std::exp(log_chart_density(chart)); }

double log_grassmannian_volume(int ambient_dim, int subspace_dim) {
  check_volume_dimensions(ambient_dim, subspace_dim);
  const int t = ambient_dim;
  const int m = subspace_dim;
  double out = m * (t - m) * std::log(std::numbers::pi);
  for (int k = 1; k <= m - 1; ++k) out += std::lgamma(k + 1.0);
  for (int k = t - m; k <= t - 1; ++k) out -= std::lgamma(k + 1.0);
  return out;
}

double grassmannian_volume(int ambient_dim, int subspace_dim) {
  check_volume_dimensions(ambient_dim, subspace_dim);
  // Small cases: exact rational coefficient, one rounding.
  if (ambient_dim <= kExactVolumeLimit) {
    const double v = to_double(grassmannian_volume_coefficient(ambient_dim, subspace_dim)) *
                     std::pow(std::numbers::pi, subspace_dim * (ambient_dim - subspace_dim));
    if (std::isnormal(v)) return v;
  }
  return std::exp(log_grassmannian_volume(ambient_dim, subspace_dim));
}

Rational grassmannian_volume_coefficient(int ambient_dim, int subspace_dim) {
  check_volume_dimensions(ambient_dim, subspace_dim);
  BigInt num = 1;
  BigInt den = 1;
  for (int k = 1; k <= subspace_dim - 1; ++k) num *= factorial(k);
  for (int k = ambient_dim - subspace_dim; k <= ambient_dim - 1; ++k) den *= factorial(k);
  return Rational(num, den);
}

}  // namespace grasscode
