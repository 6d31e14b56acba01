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

#include "grasscode/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "grasscode/errors.hpp"

namespace grasscode {
namespace {

void check_same_shape(const GrassmannPoint& a, const GrassmannPoint& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.subspace_dim() != b.subspace_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "points live in Gr(" + std::to_string(a.subspace_dim()) + ", C^" +
                    std::to_string(a.ambient_dim()) + ") and Gr(" +
                    std::to_string(b.subspace_dim()) + ", C^" +
                    std::to_string(b.ambient_dim()) + ")");
  }
}

// Total order on representatives, used only to fix which side of the pair
// forms the Gram matrix.
bool precedes(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index n = a.size();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex x = a.data()[k];
    const Complex y = b.data()[k];
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

// sin^2 of the principal angles, ascending. Large angles use
// (1 - cos)(1 + cos) with cos from the SVD of A^H B; angles below pi/4 take
// sin from the SVD of the residual B - A (A^H B), which keeps relative
// precision when the subspaces nearly coincide.
struct AngleData {
  Eigen::VectorXd cos;  // descending
  Eigen::VectorXd sin;  // ascending; only filled when some cos^2 >= 1/2
};

constexpr double kHalf = 0.5;

AngleData angle_data(const GrassmannPoint& a, const GrassmannPoint& b) {
  check_same_shape(a, b);
  const bool swap = precedes(b.basis(), a.basis());
  const ComplexMatrix& left = swap ? b.basis() : a.basis();
  const ComplexMatrix& right = swap ? a.basis() : b.basis();
  const ComplexMatrix gram = left.adjoint() * right;
  AngleData out;
  out.cos = Eigen::JacobiSVD<ComplexMatrix>(gram).singularValues();
  for (Eigen::Index k = 0; k < out.cos.size(); ++k) out.cos(k) = std::clamp(out.cos(k), 0.0, 1.0);
  if (out.cos.size() > 0 && out.cos(0) * out.cos(0) >= kHalf) {
    const ComplexMatrix residual = right - left * gram;
    out.sin = Eigen::JacobiSVD<ComplexMatrix>(residual).singularValues().reverse();
    for (Eigen::Index k = 0; k < out.sin.size(); ++k) out.sin(k) = std::clamp(out.sin(k), 0.0, 1.0);
  }
  return out;
}

bool small_angle(const AngleData& d, Eigen::Index k) {
  return d.sin.size() > 0 && d.cos(k) * d.cos(k) >= kHalf;
}

}  // namespace

void check_dimensions(int ambient_dim, int subspace_dim) {
  if (subspace_dim < 1 || 2 * subspace_dim > ambient_dim) {
    throw Error(ErrorCode::kInvalidDimensions,
                "need 1 <= M and 2M <= T, got T=" + std::to_string(ambient_dim) +
                    ", M=" + std::to_string(subspace_dim));
  }
}

double orthonormality_residual(const ComplexMatrix& basis) {
  const ComplexMatrix gram = basis.adjoint() * basis;
  const ComplexMatrix diff = gram - ComplexMatrix::Identity(gram.rows(), gram.cols());
  return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

GrassmannPoint GrassmannPoint::from_orthonormal(ComplexMatrix basis, const Tolerances& tol) {
  check_dimensions(static_cast<int>(basis.rows()), static_cast<int>(basis.cols()));
  const double residual = orthonormality_residual(basis);
  if (!(residual <= tol.orthonormality)) {
    throw Error(ErrorCode::kNotOrthonormal,
                "orthonormality residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return GrassmannPoint(std::move(basis));
}

ComplexMatrix GrassmannPoint::projector() const { return basis_ * basis_.adjoint(); }

GrassmannPoint orthonormalize(const ComplexMatrix& raw, const Tolerances& tol) {
  const auto t = static_cast<int>(raw.rows());
  const auto m = static_cast<int>(raw.cols());
  check_dimensions(t, m);

  Eigen::HouseholderQR<ComplexMatrix> qr(raw);
  const ComplexMatrix r = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
  const double scale = std::max(raw.colwise().norm().maxCoeff(), std::numeric_limits<double>::min());

  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(t, m);
  for (int j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (!(mag > tol.rank * scale)) {
      throw Error(ErrorCode::kRankDeficient,
                  "column " + std::to_string(j) + " is numerically dependent on earlier columns");
    }
    // Q R = Q D D^-1 R with D = diag(phase(R_jj)); absorbing D into Q makes
    // the R diagonal real-positive.
    q.col(j) *= d / mag;
  }
  return GrassmannPoint(std::move(q));
}

Code::Code(std::vector<GrassmannPoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorCode::kInvalidCardinality, "a code needs at least two points");
  }
  for (const auto& p : points_) {
    if (p.ambient_dim() != ambient_dim() || p.subspace_dim() != subspace_dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "code points must share (T, M)");
    }
  }
}

double PrincipalAngleSet::product_of_squared_sines() const {
  double out = 1.0;
  for (double theta : angles) out *= std::sin(theta) * std::sin(theta);
  return out;
}

double PrincipalAngleSet::squared_chordal_distance() const {
  double out = 0.0;
  for (double theta : angles) out += std::sin(theta) * std::sin(theta);
  return out;
}

double chordal_product(const GrassmannPoint& a, const GrassmannPoint& b) {
  const AngleData d = angle_data(a, b);
  double out = 1.0;
  for (Eigen::Index k = 0; k < d.cos.size(); ++k) {
    out *= small_angle(d, k) ? d.sin(k) * d.sin(k) : (1.0 - d.cos(k)) * (1.0 + d.cos(k));
  }
  return std::clamp(out, 0.0, 1.0);
}

PrincipalAngleSet principal_angles(const GrassmannPoint& a, const GrassmannPoint& b) {
  const AngleData d = angle_data(a, b);
  PrincipalAngleSet out;
  out.angles.reserve(static_cast<std::size_t>(d.cos.size()));
  // Cosines descend, so the angles come out ascending.
  for (Eigen::Index k = 0; k < d.cos.size(); ++k) {
    out.angles.push_back(small_angle(d, k) ? std::asin(d.sin(k)) : std::acos(d.cos(k)));
  }
  return out;
}

Eigen::MatrixXd pairwise_products(const Code& code) {
  const auto k = static_cast<Eigen::Index>(code.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double v = chordal_product(code[static_cast<std::size_t>(i)],
                                       code[static_cast<std::size_t>(j)]);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

EnergyResult code_energy(const Code& code, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "energy parameter N must be >= 1");
  EnergyResult out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const double d = chordal_product(code[i], code[j]);
      if (d <= 0.0) {
        if (!out.singular_pair) out.singular_pair = std::make_pair(i, j);
        continue;
      }
      // Each unordered pair stands for the two ordered pairs (i,j), (j,i).
      out.value += 2.0 * std::pow(d, -n);
    }
  }
  if (out.singular_pair) out.value = std::numeric_limits<double>::infinity();
  return out;
}

PairwiseMinimum min_pairwise_product(const Code& code) {
  PairwiseMinimum best{std::numeric_limits<double>::infinity(), 0, 1};
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const double d = chordal_product(code[i], code[j]);
      if (d < best.value) best = {d, i, j};
    }
  }
  return best;
}

}  // namespace grasscode
