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

#ifndef GRASSCODE_PEP_HPP_
#define GRASSCODE_PEP_HPP_

#include <cstddef>
#include <cstdint>

#include "grasscode/grassmann.hpp"
#include "grasscode/numeric_types.hpp"
#include "grasscode/random_stream.hpp"

namespace grasscode {

// Noncoherent block-fading channel Y = X H + sqrt(M / (T rho)) W with H
// (M x N) and W (T x N) i.i.d. standard complex Gaussian.
struct ChannelConfig {
  int ambient_dim = 0;       // T
  int subspace_dim = 0;      // M
  int receive_antennas = 1;  // N
  double snr = 1.0;          // rho, linear

  void validate() const;
  double noise_scale() const;
};

// Estimates below this are reported as out of measurable range.
inline constexpr double kMeasurableFloor = 1e-6;

struct PepEstimate {
  double p_hat = 0.0;
  std::int64_t trials = 0;
  std::int64_t errors = 0;
  // sqrt(p_hat (1 - p_hat) / trials)
  double standard_error = 0.0;
  // One-sided 95% Clopper-Pearson upper limit on the error probability.
  double upper_bound_95 = 1.0;
  // False when no errors were seen or p_hat < kMeasurableFloor; read
  // upper_bound_95 instead of p_hat then.
  bool measurable = false;
};

struct SimulationOptions {
  int threads = 0;  // 0: default_thread_count()
  // Trials per shard. Shard s always draws from rng.split(s), so estimates
  // depend on (seed, shard_trials) but not on the thread count.
  std::int64_t shard_trials = 1 << 16;
};

// One channel use with fresh H and W drawn from rng (H first, then W).
ComplexMatrix transmit(const GrassmannPoint& signal, const ChannelConfig& config,
                       RandomStream& rng);

// Deterministic channel use with caller-supplied H and W; passing a zero W
// gives the noiseless output X H.
ComplexMatrix transmit_with(const GrassmannPoint& signal, const ChannelConfig& config,
                            const ComplexMatrix& channel, const ComplexMatrix& noise);

// argmax_j tr(Y^H X_j X_j^H Y); ties go to the lowest index.
std::size_t ml_decode(const ComplexMatrix& received, const Code& code);

// Sends `sent` `trials` times and counts how often the ML decoder over the
// two-word code {sent, rival} picks `rival`. Throws kIntersectingSubspaces if
// the two spans meet.
PepEstimate estimate_pep(const GrassmannPoint& sent, const GrassmannPoint& rival,
                         const ChannelConfig& config, std::int64_t trials,
                         const RandomStream& rng, const SimulationOptions& options = {});

// Block error rate of the full code with codewords sent uniformly at random.
PepEstimate estimate_block_error(const Code& code, const ChannelConfig& config,
                                 std::int64_t trials, const RandomStream& rng,
                                 const SimulationOptions& options = {});

// High-SNR approximation C rho^{-NM} chordal_product^{-N}.
double asymptotic_pep(const GrassmannPoint& sent, const GrassmannPoint& rival, int n, double snr);

}  // namespace grasscode

#endif  // GRASSCODE_PEP_HPP_
