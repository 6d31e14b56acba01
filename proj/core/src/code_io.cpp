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

#include "grasscode/code_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "grasscode/errors.hpp"

namespace grasscode {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedCodeFile, what);
}

int read_dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    malformed(std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

ComplexMatrix read_point(const json& entries, int t, int m, std::size_t index) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(t) * m) {
    malformed("point " + std::to_string(index) + " must hold T*M = " +
              std::to_string(t * m) + " [re, im] entries");
  }
  ComplexMatrix out(t, m);
  std::size_t k = 0;
  for (int row = 0; row < t; ++row) {
    for (int col = 0; col < m; ++col, ++k) {
      const json& z = entries[k];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        malformed("point " + std::to_string(index) + " entry " + std::to_string(k) +
                  " is not a [re, im] pair");
      }
      out(row, col) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return out;
}

}  // namespace

Code parse_code_json(const std::string& text, const CodeReadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  const int t = read_dim(doc, "T");
  const int m = read_dim(doc, "M");
  const int k = read_dim(doc, "K");
  check_dimensions(t, m);
  if (!doc.contains("points") || !doc["points"].is_array()) malformed("missing \"points\" array");
  const json& points = doc["points"];
  if (k < 0 || points.size() != static_cast<std::size_t>(k)) {
    malformed("\"K\" = " + std::to_string(k) + " but " + std::to_string(points.size()) +
              " points are listed");
  }

  std::vector<GrassmannPoint> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    ComplexMatrix raw = read_point(points[i], t, m, i);
    if (options.repair) {
      out.push_back(orthonormalize(raw, options.tolerances));
    } else {
      out.push_back(GrassmannPoint::from_orthonormal(std::move(raw), options.tolerances));
    }
  }
  return Code(std::move(out));
}

std::string code_to_json(const Code& code) {
  json points = json::array();
  for (const auto& p : code) {
    json entries = json::array();
    const ComplexMatrix& b = p.basis();
    for (Eigen::Index row = 0; row < b.rows(); ++row) {
      for (Eigen::Index col = 0; col < b.cols(); ++col) {
        entries.push_back({b(row, col).real(), b(row, col).imag()});
      }
    }
    points.push_back(std::move(entries));
  }
  json doc = {{"T", code.ambient_dim()},
              {"M", code.subspace_dim()},
              {"K", code.size()},
              {"points", std::move(points)}};
  return doc.dump();
}

Code read_code_file(const std::filesystem::path& path, const CodeReadOptions& options) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_json(buf.str(), options);
}

void write_code_file(const Code& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << code_to_json(code) << '\n';
}

}  // namespace grasscode
