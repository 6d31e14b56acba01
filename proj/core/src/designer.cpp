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

#include "grasscode/designer.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "grasscode/errors.hpp"
#include "grasscode/parallel.hpp"
#include "grasscode/random_stream.hpp"
#include "grasscode/sampling.hpp"

namespace grasscode {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Full recomputation period for the running energy sum.
constexpr std::int64_t kEnergyRefresh = 1024;

struct RestartOutcome {
  std::vector<GrassmannPoint> points;
  double score = -kInf;
  std::int64_t accepted = 0;
  std::vector<double> history;
};

class HillClimber {
 public:
  HillClimber(const DesignRequest& request, RandomStream rng)
      : request_(request), rng_(std::move(rng)), k_(request.cardinality) {
    points_.reserve(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      points_.push_back(sample_uniform(request.ambient_dim, request.subspace_dim, rng_));
    }
    products_ = Eigen::MatrixXd::Zero(k_, k_);
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        products_(i, j) = products_(j, i) = chordal_product(point(i), point(j));
      }
    }
    refresh_energy();
  }

  RestartOutcome run() {
    RestartOutcome out;
    const int iters = request_.iterations;
    const double ratio = request_.step_end / request_.step_start;
    for (int it = 0; it < iters; ++it) {
      const double t = iters > 1 ? static_cast<double>(it) / (iters - 1) : 0.0;
      step(request_.step_start * std::pow(ratio, t));
      if (request_.record_history) out.history.push_back(reported(score()));
    }
    out.score = score();
    out.accepted = accepted_;
    out.points = std::move(points_);
    return out;
  }

 private:
  const GrassmannPoint& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  double energy_term(double d) const { return std::pow(d, -request_.energy_order); }

  void refresh_energy() {
    half_energy_ = 0.0;
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) half_energy_ += energy_term(products_(i, j));
    }
  }

  // Smallest entry above the diagonal, optionally ignoring row/column skip.
  std::pair<double, std::pair<int, int>> min_pair(int skip = -1) const {
    double best = kInf;
    std::pair<int, int> where{0, 1};
    for (int i = 0; i < k_; ++i) {
      if (i == skip) continue;
      for (int j = i + 1; j < k_; ++j) {
        if (j == skip) continue;
        if (products_(i, j) < best) {
          best = products_(i, j);
          where = {i, j};
        }
      }
    }
    return {best, where};
  }

  double row_min(int i, const Eigen::VectorXd& row) const {
    double best = kInf;
    for (int j = 0; j < k_; ++j) {
      if (j != i) best = std::min(best, row(j));
    }
    return best;
  }

  // Larger is better. Min-energy uses -log(energy), the negated
  // log-sum-exp of the -N log(product) terms.
  double score() const {
    if (request_.objective == Objective::kMaxMinProduct) return min_pair().first;
    return -std::log(2.0 * half_energy_);
  }

  double reported(double s) const {
    return request_.objective == Objective::kMaxMinProduct ? s : std::exp(-s);
  }

  int pick_point() {
    if (request_.objective == Objective::kMaxMinProduct && rng_.uniform() < 0.5) {
      const auto [i, j] = min_pair().second;
      return rng_.uniform() < 0.5 ? i : j;
    }
    return static_cast<int>(
        std::uniform_int_distribution<int>(0, k_ - 1)(rng_.engine()));
  }

  std::optional<GrassmannPoint> propose(int i, double step_size) {
    const ComplexMatrix& x = point(i).basis();
    ComplexMatrix z = rng_.complex_gaussian(x.rows(), x.cols());
    z -= x * (x.adjoint() * z);  // tangent to the Stiefel representative
    const double norm = z.norm();
    if (!(norm > 0.0)) return std::nullopt;
    try {
      return orthonormalize(x + (step_size / norm) * z);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  void step(double step_size) {
    const int i = pick_point();
    std::optional<GrassmannPoint> candidate = propose(i, step_size);
    if (!candidate) return;

    Eigen::VectorXd row = Eigen::VectorXd::Zero(k_);
    for (int j = 0; j < k_; ++j) {
      if (j == i) continue;
      row(j) = chordal_product(*candidate, point(j));
      // Intersecting configurations have infinite energy; never accept them.
      if (row(j) <= 0.0) return;
    }

    const double old_score = score();
    double new_score;
    double new_half_energy = half_energy_;
    if (request_.objective == Objective::kMaxMinProduct) {
      new_score = std::min(min_pair(i).first, row_min(i, row));
    } else {
      for (int j = 0; j < k_; ++j) {
        if (j == i) continue;
        new_half_energy += energy_term(row(j)) - energy_term(products_(i, j));
      }
      new_score = -std::log(2.0 * new_half_energy);
    }

    // Strict improvement, or (max-min only) an unchanged objective with the
    // moved point's nearest neighbour pushed further away.
    bool accept = new_score > old_score;
    if (!accept && request_.objective == Objective::kMaxMinProduct && new_score == old_score) {
      accept = row_min(i, row) > row_min(i, products_.row(i).transpose());
    }
    if (!accept) return;

    points_[static_cast<std::size_t>(i)] = std::move(*candidate);
    for (int j = 0; j < k_; ++j) {
      if (j == i) continue;
      products_(i, j) = products_(j, i) = row(j);
    }
    half_energy_ = new_half_energy;
    ++accepted_;
    if (request_.objective == Objective::kMinEnergy && accepted_ % kEnergyRefresh == 0) {
      refresh_energy();
    }
  }

  const DesignRequest& request_;
  RandomStream rng_;
  int k_;
  std::vector<GrassmannPoint> points_;
  Eigen::MatrixXd products_;
  double half_energy_ = 0.0;  // sum over unordered pairs
  std::int64_t accepted_ = 0;
};

}  // namespace

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::kMaxMinProduct:
      return "max-min-product";
    case Objective::kMinEnergy:
      return "min-energy";
  }
  return "unknown";
}

Objective parse_objective(std::string_view name) {
  if (name == "max-min-product") return Objective::kMaxMinProduct;
  if (name == "min-energy") return Objective::kMinEnergy;
  throw Error(ErrorCode::kInvalidArgument, "unknown objective \"" + std::string(name) + "\"");
}

void DesignRequest::validate() const {
  check_dimensions(ambient_dim, subspace_dim);
  if (cardinality < 2) throw Error(ErrorCode::kInvalidCardinality, "K must be >= 2");
  if (iterations < 1) throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  if (energy_order < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  if (!(step_start > 0.0) || !(step_end > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "step sizes must be positive");
  }
}

DesignResult optimize_code(const DesignRequest& request) {
  request.validate();
  const RandomStream root(request.seed);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(request.restarts));
  parallel_for(outcomes.size(), request.threads, [&](std::size_t r) {
    outcomes[r] = HillClimber(request, root.split(r)).run();
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].score > outcomes[best].score) best = r;
  }

  RestartOutcome& winner = outcomes[best];
  Code code(std::move(winner.points));
  const PairwiseMinimum min = min_pairwise_product(code);
  const EnergyResult energy = code_energy(code, request.energy_order);
  DesignResult out{std::move(code),
                   request.objective == Objective::kMaxMinProduct ? min.value : energy.value,
                   min.value,
                   energy.value,
                   static_cast<int>(best),
                   winner.accepted,
                   std::move(winner.history)};
  return out;
}

}  // namespace grasscode
