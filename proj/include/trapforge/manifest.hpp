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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace trapforge {

/// One row of a batch manifest. Relative image paths resolve against the
/// manifest's directory.
struct ManifestRecord {
  std::string id;
  std::string path;
  std::optional<std::string> label;
  std::optional<std::string> location;
  std::optional<std::string> timestamp;
};

/// Parses a header-bearing CSV with columns id,path[,label][,location]
/// [,timestamp] (column order free, unknown columns ignored). Record order
/// is preserved. Errors name the offending id and line for duplicates.
std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path);

}  // namespace trapforge
