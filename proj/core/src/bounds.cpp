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

#include "grasscode/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grasscode/density.hpp"
#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/moments.hpp"

namespace grasscode {
namespace {

void check_cardinality(std::int64_t k) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidCardinality, "code size must be >= 2, got " + std::to_string(k));
  }
}

void check_energy_order(int t, int m, int n) {
  check_dimensions(t, m);
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  if (n > t - 2 * m) {
    throw Error(ErrorCode::kMomentDiverges, "expected energy needs N <= T - 2M, got N=" +
                                                std::to_string(n) + " with T - 2M = " +
                                                std::to_string(t - 2 * m));
  }
}

}  // namespace

double gv_min_product(int ambient_dim, int subspace_dim, std::int64_t cardinality) {
  check_cardinality(cardinality);
  return invert_cdf(subspace_dim, ambient_dim, 1.0 / static_cast<double>(cardinality));
}

std::int64_t gv_min_cardinality(int ambient_dim, int subspace_dim, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kDomainError, "delta must lie in (0, 1), got " + std::to_string(delta));
  }
  const double f = cdf_eval(subspace_dim, ambient_dim, delta);
  if (!(f > 0.0)) {
    throw Error(ErrorCode::kDomainError, "cdf underflows at delta = " + std::to_string(delta));
  }
  return static_cast<std::int64_t>(std::ceil(1.0 / f));
}

double expected_random_energy(int ambient_dim, int subspace_dim, int n, std::int64_t cardinality) {
  check_cardinality(cardinality);
  check_energy_order(ambient_dim, subspace_dim, n);
  const double k = static_cast<double>(cardinality);
  return k * (k - 1.0) * chordal_moment({ambient_dim, subspace_dim, -static_cast<double>(n)});
}

Rational exact_expected_random_energy(int ambient_dim, int subspace_dim, int n,
                                      std::int64_t cardinality) {
  check_cardinality(cardinality);
  check_energy_order(ambient_dim, subspace_dim, n);
  const BigInt k(cardinality);
  return Rational(k * (k - 1)) * exact_chordal_moment(ambient_dim, subspace_dim, -n);
}

double union_bound_constant(int ambient_dim, int subspace_dim, int n) {
  check_dimensions(ambient_dim, subspace_dim);
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  const double nm = static_cast<double>(n) * subspace_dim;
  const double log_ratio = std::lgamma(nm + 0.5) - 0.5 * std::log(std::numbers::pi) -
                           std::lgamma(nm + 1.0);
  return 0.5 * std::exp(nm * std::log(4.0 * subspace_dim / ambient_dim) + log_ratio);
}

void UnionBoundQuery::validate() const {
  check_dimensions(ambient_dim, subspace_dim);
  if (receive_antennas < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  check_cardinality(cardinality);
  if (!(snr > 0.0)) throw Error(ErrorCode::kInvalidArgument, "SNR must be positive");
}

double union_bound(const UnionBoundQuery& query, double energy) {
  query.validate();
  if (!(energy >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "energy must be >= 0");
  const double c = union_bound_constant(query.ambient_dim, query.subspace_dim,
                                        query.receive_antennas);
  const double nm = static_cast<double>(query.receive_antennas) * query.subspace_dim;
  return c / static_cast<double>(query.cardinality) * std::pow(query.snr, -nm) * energy;
}

}  // namespace grasscode
