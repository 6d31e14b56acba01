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

#ifndef GRASSCODE_GRASSMANN_HPP_
#define GRASSCODE_GRASSMANN_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "grasscode/numeric_types.hpp"
#include "grasscode/tolerances.hpp"

namespace grasscode {

// A point of the complex Grassmannian Gr(M, C^T), held as a T x M Stiefel
// representative (orthonormal columns). Requires 1 <= M and 2M <= T.
// Immutable once constructed.
class GrassmannPoint {
 public:
  // Wraps `basis` after checking shape and orthonormality; throws
  // kInvalidDimensions or kNotOrthonormal. Use orthonormalize() for raw
  // matrices.
  static GrassmannPoint from_orthonormal(ComplexMatrix basis,
                                         const Tolerances& tol = kDefaultTolerances);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int subspace_dim() const { return static_cast<int>(basis_.cols()); }
  const ComplexMatrix& basis() const { return basis_; }

  // Orthogonal projector basis * basis^H onto the subspace.
  ComplexMatrix projector() const;

 private:
  explicit GrassmannPoint(ComplexMatrix basis) : basis_(std::move(basis)) {}

  friend GrassmannPoint orthonormalize(const ComplexMatrix&, const Tolerances&);

  ComplexMatrix basis_;
};

// Throws kInvalidDimensions unless 1 <= M and 2M <= T.
void check_dimensions(int ambient_dim, int subspace_dim);

// Max-norm of basis^H basis - I.
double orthonormality_residual(const ComplexMatrix& basis);

// Thin QR of `raw` with the diagonal of R made real and positive, so equal
// column spaces given by the same raw matrix always map to the same
// representative. Throws kRankDeficient when some |R_jj| falls below
// tol.rank times the largest column norm.
GrassmannPoint orthonormalize(const ComplexMatrix& raw,
                              const Tolerances& tol = kDefaultTolerances);

// An ordered collection of K >= 2 points sharing (T, M).
class Code {
 public:
  explicit Code(std::vector<GrassmannPoint> points);

  std::size_t size() const { return points_.size(); }
  int ambient_dim() const { return points_.front().ambient_dim(); }
  int subspace_dim() const { return points_.front().subspace_dim(); }

  const GrassmannPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<GrassmannPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<GrassmannPoint> points_;
};

// Principal angles in radians, ascending, each in [0, pi/2].
struct PrincipalAngleSet {
  std::vector<double> angles;

  // prod sin^2(theta_i); equals the chordal product.
  double product_of_squared_sines() const;
  // sum sin^2(theta_i); the squared chordal distance.
  double squared_chordal_distance() const;
};

// det(I_M - A^H B B^H A) = prod sin^2(theta_m). Angles above pi/4 use
// (1 - c_m)(1 + c_m) with c_m the singular values of A^H B clamped into
// [0, 1]; smaller angles take sin(theta_m) from the residual B - A A^H B.
// Symmetric bit for bit: the pair is put in a canonical order first.
double chordal_product(const GrassmannPoint& a, const GrassmannPoint& b);

PrincipalAngleSet principal_angles(const GrassmannPoint& a, const GrassmannPoint& b);

struct EnergyResult {
  // Sum over ordered pairs i != j of chordal_product^-N; +inf when some
  // pair intersects.
  double value = 0.0;
  // First pair (lexicographic) with zero chordal product, if any.
  std::optional<std::pair<std::size_t, std::size_t>> singular_pair;

  bool finite() const { return !singular_pair.has_value(); }
};

// Chordal-product energy with parameter N >= 1.
EnergyResult code_energy(const Code& code, int n);

struct PairwiseMinimum {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

// Minimum chordal product over unordered pairs i < j; ties resolve to the
// lexicographically first pair.
PairwiseMinimum min_pairwise_product(const Code& code);

// Symmetric K x K table of pairwise chordal products (diagonal is 0).
Eigen::MatrixXd pairwise_products(const Code& code);

}  // namespace grasscode

#endif  // GRASSCODE_GRASSMANN_HPP_
