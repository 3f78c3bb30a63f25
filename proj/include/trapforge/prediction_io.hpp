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
#include <string>
#include <vector>

#include "trapforge/ensemble.hpp"
#include "trapforge/regularizers.hpp"

namespace trapforge {

/// CSV with header "id,<class...>" in class-set order, probabilities with 9
/// significant digits. Writes to a temp file and renames, so a failed write
/// never leaves a partial file behind.
void write_predictions(const PredictionMatrix& pm, const ClassSet& cs,
                       const std::filesystem::path& path);

/// Reads the CSV format above, checks the header against the class set
/// (errors name any missing class), and applies validate_predictions.
/// Non-numeric cells are reported with row and column. A header-only file is
/// a valid N = 0 matrix.
PredictionMatrix read_predictions(const std::filesystem::path& path,
                                  const ClassSet& cs);

/// Class names from a prediction CSV header (the columns after id).
std::vector<std::string> read_prediction_header(
    const std::filesystem::path& path);

}  // namespace trapforge
