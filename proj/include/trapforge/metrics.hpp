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
#include <span>
#include <vector>

#include "trapforge/regularizers.hpp"

namespace trapforge {

/// K x K grid of counts; entry (t, p) = samples with true class t predicted
/// as p. Classes never seen still occupy rows/columns: the full declared
/// set is scored.
struct ConfusionMatrix {
  int num_classes = 0;
  std::vector<std::uint64_t> counts;  // row-major, counts[t * K + p]

  std::uint64_t at(int t, int p) const { return counts[t * num_classes + p]; }
  std::uint64_t& at(int t, int p) { return counts[t * num_classes + p]; }

  /// Shards merge by entrywise addition.
  void merge(const ConfusionMatrix& other);
};

ConfusionMatrix confusion_matrix(std::span<const int> truth,
                                 std::span<const int> pred,
                                 const ClassSet& cs);

/// Per class k: precision = cm[k][k] / colsum_k, recall = cm[k][k] / rowsum_k,
/// F1 = 2PR/(P+R). Any zero denominator (including a class absent from both
/// truth and predictions) yields F1 = 0. Counts stay in integer arithmetic
/// until the final divisions.
std::vector<double> per_class_f1(const ConfusionMatrix& cm);

/// Unweighted mean of per-class F1 over all K declared classes.
double macro_f1(const ConfusionMatrix& cm);

}  // namespace trapforge
