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

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trapforge {

/// N x K row-stochastic matrix of classifier outputs keyed by sample id.
/// Rows sum to 1 within 1e-6 after validation; ids are unique.
struct PredictionMatrix {
  std::vector<std::string> ids;
  int num_classes = 0;
  std::vector<double> probs;  // row-major, N * K

  std::size_t rows() const { return ids.size(); }
  std::span<const double> row(std::size_t i) const {
    return {probs.data() + i * num_classes,
            static_cast<std::size_t>(num_classes)};
  }
  std::span<double> row(std::size_t i) {
    return {probs.data() + i * num_classes,
            static_cast<std::size_t>(num_classes)};
  }
};

/// Weights over ensemble members, normalized to sum 1.
struct EnsembleSpec {
  std::vector<double> weights;

  static EnsembleSpec uniform(std::size_t members);
  /// Normalizes raw weights; they must be non-negative and not all zero.
  static EnsembleSpec from_weights(std::vector<double> raw);

  std::size_t members() const { return weights.size(); }
};

/// Checks entries are non-negative, ids unique, and every row sum is within
/// 1e-3 of 1; rows inside the tolerance are renormalized to sum 1 (up to
/// roundoff), anything further off is an error.
PredictionMatrix validate_predictions(PredictionMatrix pm);

/// out[i][k] = sum_m weights[m] * probs_m[i][k], aligned by sample id (row
/// order may differ between members). All members must share the same id set
/// and K. Output row order follows the first member.
PredictionMatrix weighted_average(std::span<const PredictionMatrix> members,
                                  const EnsembleSpec& spec);

/// Per row, the index of the maximum probability; ties break to the lowest
/// class index.
std::vector<std::pair<std::string, int>> argmax_labels(
    const PredictionMatrix& pm);

}  // namespace trapforge
