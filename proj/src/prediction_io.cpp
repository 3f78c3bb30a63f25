// Copyright (c) 2026 The TrapForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trapforge/prediction_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "trapforge/csv.hpp"
#include "trapforge/error.hpp"

namespace trapforge {

void write_predictions(const PredictionMatrix& pm, const ClassSet& cs,
                       const std::filesystem::path& path) {
  require(pm.num_classes == cs.size(), "matrix has ", pm.num_classes,
          " classes but the class set has ", cs.size());
  require(pm.probs.size() ==
              pm.ids.size() * static_cast<std::size_t>(pm.num_classes),
          "prediction matrix shape mismatch");

  // Write a sibling temp file and rename so failures never leave a partial
  // output behind.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot open ", tmp.string(), " for writing");
    out << "id";
    for (const std::string& name : cs.names) out << ',' << name;
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < pm.rows(); ++i) {
      out << pm.ids[i];
      for (const double p : pm.row(i)) {
        std::snprintf(buf, sizeof(buf), "%.9g", p);
        out << ',' << buf;
      }
      out << '\n';
    }
    out.flush();
    require(out.good(), "failed writing ", tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  require(!ec, "cannot rename ", tmp.string(), " to ", path.string(), ": ",
          ec.message());
}

std::vector<std::string> read_prediction_header(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open predictions ", path.string());
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "predictions ",
          path.string(), " are empty");
  std::vector<std::string> header = split_csv_line(line);
  require(header.size() >= 2, "predictions ", path.string(),
          ": header needs an id column and at least one class");
  require(trim(header[0]) == "id", "predictions ", path.string(),
          ": first header column must be \"id\", got \"", trim(header[0]),
          "\"");
  std::vector<std::string> names;
  names.reserve(header.size() - 1);
  for (std::size_t i = 1; i < header.size(); ++i) {
    names.push_back(trim(header[i]));
  }
  return names;
}

PredictionMatrix read_predictions(const std::filesystem::path& path,
                                  const ClassSet& cs) {
  const std::vector<std::string> cols = read_prediction_header(path);
  for (const std::string& name : cs.names) {
    bool found = false;
    for (const std::string& col : cols) {
      if (col == name) {
        found = true;
        break;
      }
    }
    require(found, "predictions ", path.string(), ": header is missing class \"",
            name, "\"");
  }
  require(static_cast<int>(cols.size()) == cs.size(), "predictions ",
          path.string(), ": header has ", cols.size(),
          " class columns, expected ", cs.size());
  // Columns may be permuted relative to the class set; map them back.
  std::vector<int> col_to_class(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    col_to_class[j] = cs.find(cols[j]);
  }

  std::ifstream in(path);
  require(in.good(), "cannot open predictions ", path.string());
  std::string line;
  std::getline(in, line);  // header, already parsed

  PredictionMatrix pm;
  pm.num_classes = cs.size();
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row_no;
    const std::vector<std::string> fields = split_csv_line(line);
    require(fields.size() == cols.size() + 1, "predictions ", path.string(),
            " row ", row_no, ": expected ", cols.size() + 1, " fields, got ",
            fields.size());
    pm.ids.push_back(trim(fields[0]));
    pm.probs.resize(pm.probs.size() + pm.num_classes, 0.0);
    auto row = pm.row(pm.ids.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::string cell = trim(fields[j + 1]);
      const char* begin = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      require(end != begin && *end == '\0' && !cell.empty(), "predictions ",
              path.string(), " row ", row_no, ", column \"", cols[j],
              "\": non-numeric value \"", cell, "\"");
      row[col_to_class[j]] = v;
    }
  }
  return validate_predictions(std::move(pm));
}

}  // namespace trapforge
