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

#ifndef GRASSCODE_SAMPLING_HPP_
#define GRASSCODE_SAMPLING_HPP_

#include "grasscode/grassmann.hpp"
#include "grasscode/numeric_types.hpp"
#include "grasscode/random_stream.hpp"

namespace grasscode {

// Uniform (unitarily invariant) point of Gr(M, C^T): the orthonormalized
// column span of a T x M matrix of i.i.d. standard complex Gaussians.
GrassmannPoint sample_uniform(int ambient_dim, int subspace_dim, RandomStream& rng);

// Affine-chart coordinates: the subspace spanned by [I_M ; tail], where tail
// is (T - M) x M. Every subspace whose top M x M block is invertible has
// exactly one such representative.
class AffineChartPoint {
 public:
  AffineChartPoint(int ambient_dim, ComplexMatrix tail);

  int ambient_dim() const { return ambient_dim_; }
  int subspace_dim() const { return static_cast<int>(tail_.cols()); }
  const ComplexMatrix& tail() const { return tail_; }

 private:
  int ambient_dim_;
  ComplexMatrix tail_;
};

// tail = bottom * top^-1 for the representative's blocks. Throws
// kChartSingular when the smallest singular value of the top block is below
// tol.chart_singular.
AffineChartPoint to_affine_chart(const GrassmannPoint& point,
                                 const Tolerances& tol = kDefaultTolerances);

// orthonormalize([I_M ; tail]).
GrassmannPoint from_affine_chart(const AffineChartPoint& chart);

// Density of the chart coordinate of a uniform point, with respect to
// Lebesgue measure on C^{(T-M) x M}:
//   1 / (Vol(Gr(M, C^T)) * det(I_M + tail^H tail)^T).
double chart_density(const AffineChartPoint& chart);
double log_chart_density(const AffineChartPoint& chart);

// Vol(Gr(M, C^T)) = pi^{M(T-M)} * prod_{k<M} k! / prod_{k=T-M}^{T-1} k!,
// for 1 <= M <= T. Throws kInvalidDimensions otherwise.
double grassmannian_volume(int ambient_dim, int subspace_dim);
double log_grassmannian_volume(int ambient_dim, int subspace_dim);
// The exact rational factor multiplying pi^{M(T-M)}.
Rational grassmannian_volume_coefficient(int ambient_dim, int subspace_dim);

}  // namespace grasscode

#endif  // GRASSCODE_SAMPLING_HPP_
