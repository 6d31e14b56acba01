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

#ifndef GRASSCODE_NUMERIC_TYPES_HPP_
#define GRASSCODE_NUMERIC_TYPES_HPP_

#include <complex>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace grasscode {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Exact arithmetic for partial-fraction coefficients, volumes and
// factorial-ratio oracles.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// 50 significant digits. The chordal-product densities are sums of terms
// that cancel almost completely near x = 1, so they are accumulated here
// and rounded to double once.
using HighPrecision = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<50>,
    boost::multiprecision::et_off>;

inline HighPrecision to_high_precision(const Rational& r) {
  return HighPrecision(boost::multiprecision::numerator(r)) /
         HighPrecision(boost::multiprecision::denominator(r));
}

inline double to_double(const Rational& r) {
  return static_cast<double>(to_high_precision(r));
}

}  // namespace grasscode

#endif  // GRASSCODE_NUMERIC_TYPES_HPP_
