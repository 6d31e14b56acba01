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

#ifndef GRASSCODE_CODE_IO_HPP_
#define GRASSCODE_CODE_IO_HPP_

#include <filesystem>
#include <string>

#include "grasscode/grassmann.hpp"

namespace grasscode {

// JSON code files:
//   { "T": int, "M": int, "K": int,
//     "points": [ [ [re, im], ... T*M entries, row-major ], ... K points ] }
//
// Without `repair`, every point must already satisfy the orthonormality
// tolerance (kNotOrthonormal otherwise). With `repair`, each point is passed
// through orthonormalize(), which keeps its column span.
struct CodeReadOptions {
  bool repair = false;
  Tolerances tolerances = kDefaultTolerances;
};

Code parse_code_json(const std::string& text, const CodeReadOptions& options = {});
std::string code_to_json(const Code& code);

Code read_code_file(const std::filesystem::path& path, const CodeReadOptions& options = {});
void write_code_file(const Code& code, const std::filesystem::path& path);

}  // namespace grasscode

#endif  // GRASSCODE_CODE_IO_HPP_
