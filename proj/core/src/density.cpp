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

#include "grasscode/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"

namespace grasscode {
namespace {

using Polynomial = std::vector<Rational>;  // coefficient of y^k at index k

struct Pole {
  int root;
  int multiplicity;
};

// Poles of 1/D(y): root m with multiplicity m, then root M + m with
// multiplicity M - m.
std::vector<Pole> poles_of(int mm) {
  std::vector<Pole> out;
  for (int m = 1; m <= mm; ++m) out.push_back({m, m});
  for (int m = 1; m <= mm - 1; ++m) out.push_back({mm + m, mm - m});
  return out;
}

void multiply_linear(Polynomial& poly, int root) {
  // poly *= (y - root)
  poly.push_back(0);
  for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] = poly[k - 1] - root * poly[k];
  poly[0] = -root * poly[0];
}

// D(y) / (y - root)^power.
Polynomial reduced_denominator(const std::vector<Pole>& poles, int root, int power) {
  Polynomial out{1};
  for (const Pole& pole : poles) {
    const int times = pole.root == root ? pole.multiplicity - power : pole.multiplicity;
    for (int k = 0; k < times; ++k) multiply_linear(out, pole.root);
  }
  return out;
}

// Solves the dense system in place by Gauss-Jordan elimination.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kInvalidArgument, "partial-fraction system is singular");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

void check_pdf_domain(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "pdf argument must lie in (0, 1], got " + std::to_string(x));
  }
}

void check_cdf_domain(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "cdf argument must lie in [0, 1], got " + std::to_string(x));
  }
}

// log x, taken as 0 at x = 0. Every log factor in the closed forms is
// multiplied by a positive power of x, so this yields the x -> 0 limit.
HighPrecision safe_log(const HighPrecision& x) { return x > 0 ? log(x) : HighPrecision(0); }

HighPrecision power(const HighPrecision& x, int n) {
  if (n == 0) return HighPrecision(1);
  if (x == 0) return HighPrecision(0);
  return pow(x, n);
}

double finish(const HighPrecision& value, double lo, double hi) {
  return std::clamp(static_cast<double>(value), lo, hi);
}

}  // namespace

PdfModel::PdfModel(int subspace_dim) : subspace_dim_(subspace_dim) {
  if (subspace_dim < 1) throw Error(ErrorCode::kInvalidDimensions, "M must be >= 1");
  const std::vector<Pole> poles = poles_of(subspace_dim);
  const std::size_t n = static_cast<std::size_t>(subspace_dim) * subspace_dim;

  std::vector<std::pair<int, int>> unknowns;  // (root, power)
  for (const Pole& pole : poles) {
    for (int l = 1; l <= pole.multiplicity; ++l) unknowns.emplace_back(pole.root, l);
  }

  // Row k: coefficient of y^k; column j: unknown j.
  std::vector<std::vector<Rational>> system(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial column = reduced_denominator(poles, unknowns[j].first, unknowns[j].second);
    for (std::size_t k = 0; k < column.size(); ++k) system[k][j] = column[k];
  }
  std::vector<Rational> rhs(n);
  rhs[0] = 1;
  const std::vector<Rational> solution = solve_exact(std::move(system), std::move(rhs));

  terms_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto [root, l] = unknowns[j];
    Rational weight = solution[j] / Rational(factorial(l - 1));
    if ((l - 1) % 2 == 1) weight = -weight;
    terms_.push_back({root, l, solution[j], to_high_precision(weight)});
  }
}

const PdfModel::Term& PdfModel::find(int root, int power) const {
  for (const Term& t : terms_) {
    if (t.root == root && t.power == power) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "no partial-fraction coefficient for root " +
                                               std::to_string(root) + ", order " + std::to_string(power));
}

const Rational& PdfModel::a(int m, int l) const {
  if (m < 1 || m > subspace_dim_ || l < 1 || l > m) {
    throw Error(ErrorCode::kInvalidArgument, "A index out of range");
  }
  return find(m, l).coefficient;
}

const Rational& PdfModel::b(int m, int l) const {
  if (m < 1 || m > subspace_dim_ - 1 || l < 1 || l > subspace_dim_ - m) {
    throw Error(ErrorCode::kInvalidArgument, "B index out of range");
  }
  return find(subspace_dim_ + m, l).coefficient;
}

Rational PdfModel::prefactor(int ambient_dim) const {
  const int t = ambient_dim;
  const int mm = subspace_dim_;
  BigInt out = boost::multiprecision::pow(BigInt(t - mm), static_cast<unsigned>(mm));
  for (int m = 1; m <= mm - 1; ++m) {
    out *= boost::multiprecision::pow(BigInt(t - m), static_cast<unsigned>(m));
    out *= boost::multiprecision::pow(BigInt(t - mm - m), static_cast<unsigned>(mm - m));
  }
  return Rational(out);
}

double PdfModel::pdf(int ambient_dim, double x) const {
  check_dimensions(ambient_dim, subspace_dim_);
  check_pdf_domain(x);
  if (x == 1.0) {
    // Every log factor vanishes, leaving the simple-pole coefficients; sum
    // them exactly so an exact zero stays zero.
    Rational simple = 0;
    for (const Term& t : terms_) {
      if (t.power == 1) simple += t.coefficient;
    }
    return finish(to_high_precision(prefactor(ambient_dim) * simple), 0.0,
                  std::numeric_limits<double>::infinity());
  }
  const HighPrecision hx(x);
  const HighPrecision lx = log(hx);
  HighPrecision sum = 0;
  for (const Term& t : terms_) {
    const int a = ambient_dim - t.root - 1;
    const HighPrecision xa = exp(a * lx);
    sum += t.weight * xa * power(lx, t.power - 1);
  }
  return finish(to_high_precision(prefactor(ambient_dim)) * sum, 0.0,
                std::numeric_limits<double>::infinity());
}

double PdfModel::cdf(int ambient_dim, double x) const {
  check_dimensions(ambient_dim, subspace_dim_);
  check_cdf_domain(x);
  if (x == 0.0) return 0.0;
  const HighPrecision hx(x);
  HighPrecision sum = 0;
  for (const Term& t : terms_) {
    sum += t.weight * detail::log_power_antiderivative(ambient_dim - t.root - 1, t.power - 1, hx);
  }
  return finish(to_high_precision(prefactor(ambient_dim)) * sum, 0.0, 1.0);
}

PdfModel partial_fraction_coeffs(int subspace_dim) { return PdfModel(subspace_dim); }

const PdfModel& cached_pdf_model(int subspace_dim) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const PdfModel>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[subspace_dim];
  if (!slot) slot = std::make_unique<const PdfModel>(subspace_dim);
  return *slot;
}

Rational moment_numerator(int ambient_dim, int subspace_dim) {
  const int t = ambient_dim;
  const int mm = subspace_dim;
  BigInt out = 1;
  for (int m = 1; m <= mm; ++m) {
    out *= boost::multiprecision::pow(BigInt(t - m), static_cast<unsigned>(m));
  }
  for (int m = 1; m <= mm - 1; ++m) {
    out *= boost::multiprecision::pow(BigInt(t - mm - m), static_cast<unsigned>(mm - m));
  }
  return Rational(out);
}

double pdf_closed_form(int subspace_dim, int ambient_dim, double x) {
  check_dimensions(ambient_dim, subspace_dim);
  check_pdf_domain(x);
  const int t = ambient_dim;
  const HighPrecision hx(x);
  const HighPrecision lx = safe_log(hx);
  HighPrecision value;
  switch (subspace_dim) {
    case 1:
      value = HighPrecision(t - 1) * power(hx, t - 2);
      break;
    case 2: {
      const HighPrecision c = HighPrecision(BigInt(t - 1) * (t - 2) * (t - 2) * (t - 3)) / 2;
      value = c * power(hx, t - 4) * (1 - hx * hx + 2 * hx * lx);
      break;
    }
    case 3: {
      const HighPrecision c = HighPrecision(BigInt(t - 1) * (t - 2) * (t - 2) * (t - 3) * (t - 3) *
                                            (t - 3) * (t - 4) * (t - 4) * (t - 5)) /
                              288;
      const HighPrecision x2 = hx * hx;
      const HighPrecision x3 = x2 * hx;
      const HighPrecision bracket = 1 + 80 * hx - 162 * x2 + 80 * x3 + x2 * x2 +
                                    24 * hx * lx - 24 * x3 * lx - 36 * x2 * lx * lx;
      value = c * power(hx, t - 6) * bracket;
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument, "closed forms exist only for M = 1, 2, 3");
  }
  return finish(value, 0.0, std::numeric_limits<double>::infinity());
}

double cdf_closed_form(int subspace_dim, int ambient_dim, double x) {
  check_dimensions(ambient_dim, subspace_dim);
  check_cdf_domain(x);
  if (x == 0.0) return 0.0;
  const int t = ambient_dim;
  const HighPrecision hx(x);
  const HighPrecision lx = safe_log(hx);
  HighPrecision value;
  switch (subspace_dim) {
    case 1:
      value = power(hx, t - 1);
      break;
    case 2: {
      const HighPrecision c = HighPrecision(BigInt(t - 1) * (t - 2) * (t - 2) * (t - 3)) / 2;
      const HighPrecision bracket = HighPrecision(1) / (t - 3) -
                                    2 * hx / HighPrecision(BigInt(t - 2) * (t - 2)) -
                                    hx * hx / (t - 1) + 2 * hx * lx / (t - 2);
      value = c * power(hx, t - 3) * bracket;
      break;
    }
    case 3: {
      const HighPrecision c = HighPrecision(BigInt(t - 1) * (t - 2) * (t - 2) * (t - 3) * (t - 3) *
                                            (t - 3) * (t - 4) * (t - 4) * (t - 5)) /
                              288;
      const HighPrecision t1(t - 1);
      const HighPrecision t2(t - 2);
      const HighPrecision t3(t - 3);
      const HighPrecision t4(t - 4);
      const HighPrecision t5(t - 5);
      const HighPrecision x2 = hx * hx;
      const HighPrecision x3 = x2 * hx;
      const HighPrecision q = 1 / t5 + 80 * hx / t4 - 24 * hx / (t4 * t4) - 162 * x2 / t3 -
                              72 * x2 / (t3 * t3 * t3) + 80 * x3 / t2 + 24 * x3 / (t2 * t2) +
                              x2 * x2 / t1 + 24 * hx * lx / t4 + 72 * x2 * lx / (t3 * t3) -
                              24 * x3 * lx / t2 - 36 * x2 * lx * lx / t3;
      value = c * power(hx, t - 5) * q;
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument, "closed forms exist only for M = 1, 2, 3");
  }
  return finish(value, 0.0, 1.0);
}

double pdf_eval(int subspace_dim, int ambient_dim, double x) {
  if (subspace_dim >= 1 && subspace_dim <= 3) return pdf_closed_form(subspace_dim, ambient_dim, x);
  check_dimensions(ambient_dim, subspace_dim);
  return cached_pdf_model(subspace_dim).pdf(ambient_dim, x);
}

double cdf_eval(int subspace_dim, int ambient_dim, double x) {
  if (subspace_dim >= 1 && subspace_dim <= 3) return cdf_closed_form(subspace_dim, ambient_dim, x);
  check_dimensions(ambient_dim, subspace_dim);
  return cached_pdf_model(subspace_dim).cdf(ambient_dim, x);
}

double invert_cdf(int subspace_dim, int ambient_dim, double q, const Tolerances& tol) {
  check_dimensions(ambient_dim, subspace_dim);
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "cdf level must lie in (0, 1], got " + std::to_string(q));
  }
  if (q == 1.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  // Width relative to hi (<= 1), so the absolute tolerance holds as well and
  // the cdf residual stays small where the density is large near 0.
  while (hi - lo > tol.bisection * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cdf_eval(subspace_dim, ambient_dim, mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace detail {

Rational exact_log_power_integral(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::kInvalidArgument, "need a, b >= 0");
  Rational out(factorial(b), boost::multiprecision::pow(BigInt(a + 1), static_cast<unsigned>(b + 1)));
  return b % 2 == 1 ? Rational(-out) : out;
}

double log_power_integral(int a, int b) { return to_double(exact_log_power_integral(a, b)); }

HighPrecision log_power_antiderivative(int a, int b, const HighPrecision& x) {
  if (a < 0 || b < 0) throw Error(ErrorCode::kInvalidArgument, "need a, b >= 0");
  if (x == 0) return HighPrecision(0);
  const HighPrecision lx = log(x);
  const HighPrecision a1(a + 1);
  HighPrecision sum = 0;
  // k-th term: (-1)^k b!/(b-k)! log^{b-k} x / (a+1)^{k+1}
  HighPrecision falling = 1;
  HighPrecision denom = a1;
  for (int k = 0; k <= b; ++k) {
    const HighPrecision term = falling * power(lx, b - k) / denom;
    sum += k % 2 == 0 ? term : HighPrecision(-term);
    falling *= (b - k);
    denom *= a1;
  }
  return exp(a1 * lx) * sum;
}

}  // namespace detail

}  // namespace grasscode
