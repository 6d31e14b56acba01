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

#include "grasscode/moments.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"

namespace grasscode {
namespace {

Rational factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return Rational(out);
}

// Gamma(a + p) / Gamma(a), accurate to a few ulps for large a.
double rising_ratio(double a, double p) { return 1.0 / boost::math::tgamma_delta_ratio(a, p); }

double lgamma_moment(double t, int m_max, double p) {
  double out = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    out += std::lgamma(t - m + 1.0) + std::lgamma(t + p - m - m_max + 1.0) -
           std::lgamma(t - m - m_max + 1.0) - std::lgamma(t + p - m + 1.0);
  }
  return out;
}

// Direct product of Gamma ratios; 0 when it leaves the normal double range.
double direct_moment(double t, int m_max, double p) {
  double out = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    out *= rising_ratio(t - m - m_max + 1.0, p) / rising_ratio(t - m + 1.0, p);
  }
  return std::isnormal(out) ? out : 0.0;
}

}  // namespace

void MomentQuery::validate() const {
  check_dimensions(ambient_dim, subspace_dim);
  const double boundary = 2.0 * subspace_dim - ambient_dim - 1.0;
  if (!(p > boundary)) {
    throw Error(ErrorCode::kMomentDiverges,
                "moment of order " + std::to_string(p) + " needs p > " + std::to_string(boundary));
  }
}

double log_chordal_moment(const MomentQuery& query) {
  query.validate();
  const double t = query.ambient_dim;
  const double direct = direct_moment(t, query.subspace_dim, query.p);
  return direct > 0.0 ? std::log(direct) : lgamma_moment(t, query.subspace_dim, query.p);
}

double chordal_moment(const MomentQuery& query) {
  query.validate();
  const double t = query.ambient_dim;
  const double direct = direct_moment(t, query.subspace_dim, query.p);
  return direct > 0.0 ? direct : std::exp(lgamma_moment(t, query.subspace_dim, query.p));
}

Rational exact_chordal_moment(int ambient_dim, int subspace_dim, int p) {
  MomentQuery{ambient_dim, subspace_dim, static_cast<double>(p)}.validate();
  const int t = ambient_dim;
  const int mm = subspace_dim;
  Rational out = 1;
  for (int m = 1; m <= mm; ++m) {
    out *= factorial(t - m) * factorial(t + p - m - mm) /
           (factorial(t - m - mm) * factorial(t + p - m));
  }
  return out;
}

std::vector<BetaFactor> beta_product_params(int ambient_dim, int subspace_dim) {
  check_dimensions(ambient_dim, subspace_dim);
  std::vector<BetaFactor> out;
  out.reserve(static_cast<std::size_t>(subspace_dim));
  for (int m = 1; m <= subspace_dim; ++m) {
    out.push_back({static_cast<double>(ambient_dim - subspace_dim + 1 - m),
                   static_cast<double>(subspace_dim)});
  }
  return out;
}

double beta_moment(const BetaFactor& factor, double p) {
  if (!(factor.alpha > 0.0) || !(factor.beta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "beta parameters must be positive");
  }
  if (!(p + factor.alpha > 0.0)) {
    throw Error(ErrorCode::kMomentDiverges, "beta moment needs p + alpha > 0");
  }
  return rising_ratio(factor.alpha, p) / rising_ratio(factor.alpha + factor.beta, p);
}

double sample_beta(const BetaFactor& factor, RandomStream& rng) {
  const double x = rng.gamma(factor.alpha);
  const double y = rng.gamma(factor.beta);
  return x / (x + y);
}

double sample_beta_product(int ambient_dim, int subspace_dim, RandomStream& rng) {
  double out = 1.0;
  for (const auto& factor : beta_product_params(ambient_dim, subspace_dim)) {
    out *= sample_beta(factor, rng);
  }
  return out;
}

}  // namespace grasscode
