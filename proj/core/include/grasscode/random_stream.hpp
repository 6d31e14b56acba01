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

#ifndef GRASSCODE_RANDOM_STREAM_HPP_
#define GRASSCODE_RANDOM_STREAM_HPP_

#include <cstdint>
#include <random>

#include "grasscode/numeric_types.hpp"

namespace grasscode {

// Seeded pseudorandom stream. A stream is identified by (seed, stream id);
// split() derives child streams deterministically so Monte-Carlo shards are
// reproducible from (seed, shard index) regardless of how many threads run
// them. Streams are not shared between threads.
class RandomStream {
 public:
  using Engine = std::mt19937_64;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  // Child stream `index` of this stream. Does not advance *this.
  RandomStream split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0, 1).
  double uniform();
  double standard_normal();
  // Circularly-symmetric complex Gaussian with E|z|^2 = 1: real and
  // imaginary parts are independent N(0, 1/2).
  Complex complex_normal();
  // Gamma(shape, 1).
  double gamma(double shape);
  // rows x cols matrix of independent complex_normal() entries, filled in
  // column-major order.
  ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols);

  Engine& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  Engine engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace grasscode

#endif  // GRASSCODE_RANDOM_STREAM_HPP_
