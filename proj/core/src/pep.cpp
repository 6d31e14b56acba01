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

#include "grasscode/pep.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "grasscode/bounds.hpp"
#include "grasscode/errors.hpp"
#include "grasscode/parallel.hpp"

namespace grasscode {
namespace {

void check_signal(const GrassmannPoint& signal, const ChannelConfig& config) {
  if (signal.ambient_dim() != config.ambient_dim || signal.subspace_dim() != config.subspace_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "signal shape does not match the channel (T, M)");
  }
}

PepEstimate summarize(std::int64_t errors, std::int64_t trials) {
  PepEstimate out;
  out.trials = trials;
  out.errors = errors;
  out.p_hat = static_cast<double>(errors) / static_cast<double>(trials);
  out.standard_error = std::sqrt(out.p_hat * (1.0 - out.p_hat) / static_cast<double>(trials));
  out.upper_bound_95 = boost::math::binomial_distribution<>::find_upper_bound_on_p(
      static_cast<double>(trials), static_cast<double>(errors), 0.05);
  out.measurable = errors > 0 && out.p_hat >= kMeasurableFloor;
  return out;
}

// Runs count_errors(shard_rng, shard_trials) over independent shards and
// sums the error counts.
PepEstimate run_sharded(std::int64_t trials, const RandomStream& rng,
                        const SimulationOptions& options,
                        const std::function<std::int64_t(RandomStream&, std::int64_t)>& count_errors) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (options.shard_trials < 1) throw Error(ErrorCode::kInvalidArgument, "shard size must be >= 1");
  const std::int64_t shards = (trials + options.shard_trials - 1) / options.shard_trials;
  std::vector<std::int64_t> errors(static_cast<std::size_t>(shards), 0);
  parallel_for(errors.size(), options.threads, [&](std::size_t s) {
    const std::int64_t begin = static_cast<std::int64_t>(s) * options.shard_trials;
    const std::int64_t n = std::min(options.shard_trials, trials - begin);
    RandomStream shard_rng = rng.split(s);
    errors[s] = count_errors(shard_rng, n);
  });
  std::int64_t total = 0;
  for (std::int64_t e : errors) total += e;
  return summarize(total, trials);
}

}  // namespace

void ChannelConfig::validate() const {
  check_dimensions(ambient_dim, subspace_dim);
  if (receive_antennas < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  if (!(snr > 0.0)) throw Error(ErrorCode::kInvalidArgument, "SNR must be positive");
}

double ChannelConfig::noise_scale() const {
  return std::sqrt(static_cast<double>(subspace_dim) / (ambient_dim * snr));
}

ComplexMatrix transmit_with(const GrassmannPoint& signal, const ChannelConfig& config,
                            const ComplexMatrix& channel, const ComplexMatrix& noise) {
  config.validate();
  check_signal(signal, config);
  if (channel.rows() != config.subspace_dim || channel.cols() != config.receive_antennas ||
      noise.rows() != config.ambient_dim || noise.cols() != config.receive_antennas) {
    throw Error(ErrorCode::kDimensionMismatch, "H must be M x N and W must be T x N");
  }
  return signal.basis() * channel + config.noise_scale() * noise;
}

ComplexMatrix transmit(const GrassmannPoint& signal, const ChannelConfig& config,
                       RandomStream& rng) {
  const ComplexMatrix h = rng.complex_gaussian(config.subspace_dim, config.receive_antennas);
  const ComplexMatrix w = rng.complex_gaussian(config.ambient_dim, config.receive_antennas);
  return transmit_with(signal, config, h, w);
}

std::size_t ml_decode(const ComplexMatrix& received, const Code& code) {
  if (received.rows() != code.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "received block has the wrong number of rows");
  }
  std::size_t best = 0;
  double best_stat = -1.0;
  for (std::size_t j = 0; j < code.size(); ++j) {
    const double stat = (code[j].basis().adjoint() * received).squaredNorm();
    if (stat > best_stat) {
      best_stat = stat;
      best = j;
    }
  }
  return best;
}

PepEstimate estimate_pep(const GrassmannPoint& sent, const GrassmannPoint& rival,
                         const ChannelConfig& config, std::int64_t trials,
                         const RandomStream& rng, const SimulationOptions& options) {
  config.validate();
  check_signal(sent, config);
  check_signal(rival, config);
  if (chordal_product(sent, rival) <= 0.0) {
    throw Error(ErrorCode::kIntersectingSubspaces, "the two codewords share a direction");
  }
  const Code pair({sent, rival});
  return run_sharded(trials, rng, options, [&](RandomStream& shard_rng, std::int64_t n) {
    std::int64_t errors = 0;
    for (std::int64_t t = 0; t < n; ++t) {
      if (ml_decode(transmit(sent, config, shard_rng), pair) != 0) ++errors;
    }
    return errors;
  });
}

PepEstimate estimate_block_error(const Code& code, const ChannelConfig& config,
                                 std::int64_t trials, const RandomStream& rng,
                                 const SimulationOptions& options) {
  config.validate();
  check_signal(code[0], config);
  const auto k = static_cast<std::uint64_t>(code.size());
  return run_sharded(trials, rng, options, [&](RandomStream& shard_rng, std::int64_t n) {
    std::int64_t errors = 0;
    for (std::int64_t t = 0; t < n; ++t) {
      const auto index = static_cast<std::size_t>(
          std::uniform_int_distribution<std::uint64_t>(0, k - 1)(shard_rng.engine()));
      if (ml_decode(transmit(code[index], config, shard_rng), code) != index) ++errors;
    }
    return errors;
  });
}

double asymptotic_pep(const GrassmannPoint& sent, const GrassmannPoint& rival, int n, double snr) {
  const double d = chordal_product(sent, rival);
  if (d <= 0.0) {
    throw Error(ErrorCode::kIntersectingSubspaces, "the two codewords share a direction");
  }
  if (!(snr > 0.0)) throw Error(ErrorCode::kInvalidArgument, "SNR must be positive");
  const double c = union_bound_constant(sent.ambient_dim(), sent.subspace_dim(), n);
  const double nm = static_cast<double>(n) * sent.subspace_dim();
  return c * std::pow(snr, -nm) * std::pow(d, -n);
}

}  // namespace grasscode
