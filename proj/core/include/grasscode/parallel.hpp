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

#ifndef GRASSCODE_PARALLEL_HPP_
#define GRASSCODE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace grasscode {

// Name of the environment variable holding the default worker count.
inline constexpr const char* kThreadsEnvVar = "GRASSCODE_THREADS";

// Worker count from GRASSCODE_THREADS when set to a positive integer,
// otherwise std::thread::hardware_concurrency() (at least 1).
int default_thread_count();

// Runs task(i) for i in [0, count) on up to `threads` workers (0 means
// default_thread_count()). Tasks must write only to their own slot; the
// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace grasscode

#endif  // GRASSCODE_PARALLEL_HPP_
