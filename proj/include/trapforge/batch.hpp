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
#include <iosfwd>
#include <string>
#include <vector>

#include "trapforge/ensemble.hpp"
#include "trapforge/metrics.hpp"
#include "trapforge/pipeline_config.hpp"

namespace trapforge {

struct AugmentOptions {
  std::filesystem::path manifest_path;
  std::filesystem::path config_path;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  bool seed_from_cli = false;
  bool strict = true;
  int workers = 1;
};

/// Per-record outcome, reported in manifest order.
struct RecordReport {
  std::string id;
  std::string output;      // path relative to out_dir, empty on failure
  std::string error;       // empty on success
  std::vector<std::string> steps_applied;
  std::string mixup_partner;  // empty unless mixup paired this record
  double mixup_lambda = 1.0;
};

struct AugmentReport {
  std::uint64_t seed = 0;
  std::size_t total = 0;      // manifest records
  std::size_t succeeded = 0;  // base outputs written
  std::size_t failed = 0;
  std::size_t mixup_outputs = 0;
  std::vector<std::string> step_kinds;
  std::vector<std::size_t> step_fired;  // per step, over succeeded records
  std::vector<RecordReport> records;
};

AugmentReport run_augment(const AugmentOptions& opts);

void write_report_json(const AugmentReport& report,
                       const std::filesystem::path& path);

struct EvaluateResult {
  ClassSet classes;
  ConfusionMatrix confusion;
  std::vector<double> per_class_f1;
  double macro_f1 = 0.0;
  std::size_t num_samples = 0;
};

EvaluateResult run_evaluate(const std::filesystem::path& pred_path,
                            const std::filesystem::path& truth_path,
                            const std::string& classes_arg);

void print_evaluate_result(const EvaluateResult& result, std::ostream& os);

struct EnsembleOptions {
  std::vector<std::filesystem::path> pred_paths;
  std::vector<double> weights;  // empty selects uniform weights
  std::filesystem::path out_path;
};

/// Returns the normalized weights actually used.
EnsembleSpec run_ensemble(const EnsembleOptions& opts);

}  // namespace trapforge
