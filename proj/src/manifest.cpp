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

#include "trapforge/manifest.hpp"

#include <fstream>
#include <unordered_map>

#include "trapforge/csv.hpp"
#include "trapforge/error.hpp"

namespace trapforge {

std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open manifest ", path.string());

  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "manifest ",
          path.string(), " is empty");
  const std::vector<std::string> header = split_csv_line(line);
  int id_col = -1;
  int path_col = -1;
  int label_col = -1;
  int location_col = -1;
  int timestamp_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = trim(header[i]);
    if (name == "id") id_col = static_cast<int>(i);
    else if (name == "path") path_col = static_cast<int>(i);
    else if (name == "label") label_col = static_cast<int>(i);
    else if (name == "location") location_col = static_cast<int>(i);
    else if (name == "timestamp") timestamp_col = static_cast<int>(i);
    // Unknown columns are ignored.
  }
  require(id_col >= 0, "manifest ", path.string(), " is missing column \"id\"");
  require(path_col >= 0, "manifest ", path.string(),
          " is missing column \"path\"");

  const std::filesystem::path base = path.parent_path();
  std::vector<ManifestRecord> records;
  std::unordered_map<std::string, std::size_t> first_line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    require(fields.size() == header.size(), "manifest ", path.string(),
            " line ", line_no, ": expected ", header.size(), " fields, got ",
            fields.size());

    ManifestRecord rec;
    rec.id = trim(fields[id_col]);
    require(!rec.id.empty(), "manifest ", path.string(), " line ", line_no,
            ": empty id");
    const auto [it, inserted] = first_line.emplace(rec.id, line_no);
    require(inserted, "manifest ", path.string(), ": duplicate id \"", rec.id,
            "\" on line ", line_no, " (first seen on line ", it->second, ")");

    std::string p = trim(fields[path_col]);
    require(!p.empty(), "manifest ", path.string(), " line ", line_no,
            ": empty path for id \"", rec.id, "\"");
    std::filesystem::path img(p);
    rec.path = img.is_absolute() ? img.string() : (base / img).string();

    if (label_col >= 0) {
      const std::string v = trim(fields[label_col]);
      if (!v.empty()) rec.label = v;
    }
    if (location_col >= 0) {
      const std::string v = trim(fields[location_col]);
      if (!v.empty()) rec.location = v;
    }
    if (timestamp_col >= 0) {
      const std::string v = trim(fields[timestamp_col]);
      if (!v.empty()) rec.timestamp = v;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace trapforge
