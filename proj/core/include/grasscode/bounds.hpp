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

#ifndef GRASSCODE_BOUNDS_HPP_
#define GRASSCODE_BOUNDS_HPP_

#include <cstdint>

#include "grasscode/numeric_types.hpp"

namespace grasscode {

// Gilbert-Varshamov: some K-point code in Gr(M, C^T) has every pairwise
// chordal product >= delta, where F_M(delta; T) = 1/K. Throws
// kInvalidCardinality for K < 2.
double gv_min_product(int ambient_dim, int subspace_dim, std::int64_t cardinality);

// Smallest integer K with K >= 1 / F_M(delta; T): the guaranteed code size at
// minimum chordal product delta in (0, 1).
std::int64_t gv_min_cardinality(int ambient_dim, int subspace_dim, double delta);

// Expected energy of K i.i.d. uniform points:
//   K(K-1) prod_{m=1}^{M} (T-m)! (T-N-m-M)! / ((T-m-M)! (T-N-m)!),
// i.e. K(K-1) times the moment of order -N. Needs N <= T - 2M
// (kMomentDiverges otherwise).
double expected_random_energy(int ambient_dim, int subspace_dim, int n, std::int64_t cardinality);
Rational exact_expected_random_energy(int ambient_dim, int subspace_dim, int n,
                                      std::int64_t cardinality);

// C = (1/2) (4M/T)^{NM} (2NM-1)!! / (2NM)!!, the constant of the high-SNR
// pairwise error probability. The double-factorial ratio is evaluated as
// Gamma(NM + 1/2) / (sqrt(pi) Gamma(NM + 1)).
double union_bound_constant(int ambient_dim, int subspace_dim, int n);

struct UnionBoundQuery {
  int ambient_dim = 0;
  int subspace_dim = 0;
  int receive_antennas = 1;  // N
  std::int64_t cardinality = 2;
  double snr = 1.0;  // rho, linear scale

  void validate() const;
};

// (C/K) rho^{-NM} * energy, where `energy` is the raw ordered-pair sum.
double union_bound(const UnionBoundQuery& query, double energy);

}  // namespace grasscode

#endif  // GRASSCODE_BOUNDS_HPP_
