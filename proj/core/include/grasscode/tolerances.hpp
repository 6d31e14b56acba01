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

#ifndef GRASSCODE_TOLERANCES_HPP_
#define GRASSCODE_TOLERANCES_HPP_

namespace grasscode {

// Numerical thresholds shared by every module. Functions that need one take
// a `const Tolerances&` defaulted to kDefaultTolerances.
struct Tolerances {
  // Max-norm bound on (B^H B - I) for a basis to count as orthonormal.
  double orthonormality = 1e-12;
  // Relative size of an R-diagonal entry below which a QR input is rank
  // deficient.
  double rank = 1e-10;
  // Agreement between algebraically equivalent routes (chordal product vs.
  // principal angles, and similar).
  double consistency = 1e-10;
  // Smallest singular value of the top M x M block accepted by the affine
  // chart.
  double chart_singular = 1e-10;
  // Absolute bracket width at which cdf inversion stops.
  double bisection = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace grasscode

#endif  // GRASSCODE_TOLERANCES_HPP_
