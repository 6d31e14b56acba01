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

#ifndef GRASSCODE_MOMENTS_HPP_
#define GRASSCODE_MOMENTS_HPP_

#include <vector>

#include "grasscode/numeric_types.hpp"
#include "grasscode/random_stream.hpp"

namespace grasscode {

// p-th moment request for the chordal product of a uniform point against a
// fixed one. Admissible when 2M <= T and p > 2M - T - 1; p may be negative
// or non-integer.
struct MomentQuery {
  int ambient_dim = 0;
  int subspace_dim = 0;
  double p = 0.0;

  // Throws kInvalidDimensions or kMomentDiverges.
  void validate() const;
};

// Beta(alpha, beta) factor of the product representation.
struct BetaFactor {
  double alpha = 1.0;
  double beta = 1.0;
};

// E[det(I - B^H A A^H B)^p] =
//   prod_{m=1}^{M} G(T-m+1) G(T+p-m-M+1) / (G(T-m-M+1) G(T+p-m+1)),
// computed as exp of a sum of lgamma differences.
double chordal_moment(const MomentQuery& query);
double log_chordal_moment(const MomentQuery& query);

// Same quantity for integer p, in exact rational arithmetic.
Rational exact_chordal_moment(int ambient_dim, int subspace_dim, int p);

// Factor m (1-based) is Beta(T - M + 1 - m, M), m = 1..M.
std::vector<BetaFactor> beta_product_params(int ambient_dim, int subspace_dim);

// G(a+b) G(a+p) / (G(a+b+p) G(a)); throws kMomentDiverges when p + a <= 0.
double beta_moment(const BetaFactor& factor, double p);

// Beta(a, b) draw as X / (X + Y) with X ~ Gamma(a), Y ~ Gamma(b).
double sample_beta(const BetaFactor& factor, RandomStream& rng);

// Product of independent draws from beta_product_params(T, M). Has the same
// law as the chordal product of a uniform point against a fixed one.
double sample_beta_product(int ambient_dim, int subspace_dim, RandomStream& rng);

}  // namespace grasscode

#endif  // GRASSCODE_MOMENTS_HPP_
