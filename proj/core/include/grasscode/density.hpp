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

#ifndef GRASSCODE_DENSITY_HPP_
#define GRASSCODE_DENSITY_HPP_

#include <cstddef>
#include <vector>

#include "grasscode/numeric_types.hpp"
#include "grasscode/tolerances.hpp"

namespace grasscode {

// Density of the chordal product x = det(I - B^H A A^H B) for uniform [A]
// and fixed [B] in Gr(M, C^T).
//
// The moments are prefactor(T) / D(T + p) with
//   D(y) = prod_{m=1}^{M} (y - m)^m * prod_{m=1}^{M-1} (y - M - m)^{M-m},
// so a partial-fraction expansion of 1/D, whose coefficients depend only on
// M, gives the pdf as a finite sum of x^a log^b x terms:
//   1/D(y) = sum_m sum_l A_ml / (y - m)^l + sum_m sum_l B_ml / (y - M - m)^l
//   f_M(x;T) = prefactor(T) * [ sum A_ml (-1)^{l-1}/(l-1)! x^{T-m-1} log^{l-1} x
//                             + sum B_ml (-1)^{l-1}/(l-1)! x^{T-m-M-1} log^{l-1} x ].
// The M^2 coefficients are found by equating coefficients of x^0..x^{M^2-1}
// in sum_k c_k * D(y) / (y - r_k)^{l_k} = 1 and solving in exact rationals.
class PdfModel {
 public:
  explicit PdfModel(int subspace_dim);

  int subspace_dim() const { return subspace_dim_; }
  std::size_t coefficient_count() const { return terms_.size(); }

  // A_ml for 1 <= l <= m <= M.
  const Rational& a(int m, int l) const;
  // B_ml for 1 <= m <= M - 1, 1 <= l <= M - m.
  const Rational& b(int m, int l) const;

  // (T - M)^M * prod_{m=1}^{M-1} (T - m)^m (T - M - m)^{M - m}.
  Rational prefactor(int ambient_dim) const;

  // General-M pdf and cdf. pdf needs x in (0, 1], cdf x in [0, 1]; both
  // require 2M <= T.
  double pdf(int ambient_dim, double x) const;
  double cdf(int ambient_dim, double x) const;

 private:
  struct Term {
    int root;           // r: the pole of 1/D this coefficient sits on
    int power;          // l: order of the pole
    Rational coefficient;
    HighPrecision weight;  // coefficient * (-1)^{l-1} / (l-1)!
  };

  const Term& find(int root, int power) const;

  int subspace_dim_;
  std::vector<Term> terms_;
};

// Builds the model by solving the M^2 x M^2 system.
PdfModel partial_fraction_coeffs(int subspace_dim);

// Process-wide model for M, built once on first use.
const PdfModel& cached_pdf_model(int subspace_dim);

// prod_{m=1}^{M} (T - m)^m * prod_{m=1}^{M-1} (T - M - m)^{M - m}: the
// numerator of the moment ratio, for checking it against
// PdfModel::prefactor.
Rational moment_numerator(int ambient_dim, int subspace_dim);

// Printed closed forms for M = 1, 2, 3 (kInvalidArgument otherwise).
double pdf_closed_form(int subspace_dim, int ambient_dim, double x);
double cdf_closed_form(int subspace_dim, int ambient_dim, double x);

// Closed forms for M <= 3, the partial-fraction model above that. Throws
// kDomainError for x outside (0, 1] (pdf) or [0, 1] (cdf).
double pdf_eval(int subspace_dim, int ambient_dim, double x);
double cdf_eval(int subspace_dim, int ambient_dim, double x);

// The x in (0, 1] with cdf_eval(M, T, x) = q, by bisection on [0, 1] down to
// tol.bisection. q must lie in (0, 1].
double invert_cdf(int subspace_dim, int ambient_dim, double q,
                  const Tolerances& tol = kDefaultTolerances);

namespace detail {

// int_0^1 x^a log^b x dx = (-1)^b b! / (a + 1)^{b + 1} for integers a, b >= 0.
double log_power_integral(int a, int b);
Rational exact_log_power_integral(int a, int b);

// int_0^x s^a log^b s ds
//   = x^{a+1} sum_{k=0}^{b} (-1)^k b!/(b-k)! log^{b-k}(x) / (a+1)^{k+1},
// from repeated integration by parts. Needs a >= 0, x in [0, 1].
HighPrecision log_power_antiderivative(int a, int b, const HighPrecision& x);

}  // namespace detail

}  // namespace grasscode

#endif  // GRASSCODE_DENSITY_HPP_
