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

#ifndef GRASSCODE_DESIGNER_HPP_
#define GRASSCODE_DESIGNER_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "grasscode/grassmann.hpp"

namespace grasscode {

enum class Objective {
  kMaxMinProduct,  // maximize the minimum pairwise chordal product
  kMinEnergy,      // minimize the chordal-product energy with parameter N
};

std::string_view to_string(Objective objective);
// Accepts "max-min-product" and "min-energy"; kInvalidArgument otherwise.
Objective parse_objective(std::string_view name);

struct DesignRequest {
  int ambient_dim = 0;
  int subspace_dim = 0;
  int cardinality = 2;
  Objective objective = Objective::kMaxMinProduct;
  int energy_order = 1;  // N, used by kMinEnergy and for reporting
  int iterations = 10000;
  int restarts = 1;
  std::uint64_t seed = 0;
  // Perturbation size decays geometrically from step_start to step_end over
  // the iteration budget.
  double step_start = 0.5;
  double step_end = 1e-3;
  int threads = 0;  // 0: default_thread_count()
  bool record_history = false;

  void validate() const;
};

struct DesignResult {
  Code code;
  // Min pairwise product for kMaxMinProduct, energy for kMinEnergy.
  double objective_value = 0.0;
  double min_product = 0.0;
  double energy = 0.0;  // with parameter energy_order
  int best_restart = 0;
  std::int64_t accepted_moves = 0;
  // Objective value after every iteration of the winning restart, when
  // requested.
  std::vector<double> history;
};

// Hill climbing with random restarts. Each restart starts from K uniform
// points and repeatedly moves one point a random tangent step, keeping the
// move only when the objective does not get worse (see designer.cpp for the
// tie rule). Restarts run in parallel on streams split from `seed`; the best
// restart wins, ties going to the lowest index. Deterministic given the request.
DesignResult optimize_code(const DesignRequest& request);

}  // namespace grasscode

#endif  // GRASSCODE_DESIGNER_HPP_
