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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "trapforge/augment.hpp"
#include "trapforge/regularizers.hpp"

namespace trapforge {

/// Declarative augmentation run configuration. See docs/config.md for the
/// JSON schema.
struct PipelineConfig {
  std::optional<std::uint64_t> seed;
  ClassSet class_set;
  std::vector<AugmentStep> steps;
  SmoothingConfig smoothing;
  double mixup_alpha = 0.2;
  bool mixup_enabled = false;
};

PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Parses the JSON text form directly (used by tests).
PipelineConfig parse_pipeline_config(const std::string& json_text);

}  // namespace trapforge
