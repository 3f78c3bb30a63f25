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

#include "trapforge/metrics.hpp"

#include "trapforge/error.hpp"

namespace trapforge {

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  require(num_classes == other.num_classes,
          "cannot merge confusion matrices of different sizes: ", num_classes,
          " vs ", other.num_classes);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    counts[i] += other.counts[i];
  }
}

ConfusionMatrix confusion_matrix(std::span<const int> truth,
                                 std::span<const int> pred,
                                 const ClassSet& cs) {
  require(truth.size() == pred.size(), "truth has ", truth.size(),
          " entries but predictions have ", pred.size());
  const int k = cs.size();
  ConfusionMatrix cm;
  cm.num_classes = k;
  cm.counts.assign(static_cast<std::size_t>(k) * k, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    require(truth[i] >= 0 && truth[i] < k, "truth index ", truth[i],
            " out of range for K=", k);
    require(pred[i] >= 0 && pred[i] < k, "prediction index ", pred[i],
            " out of range for K=", k);
    ++cm.at(truth[i], pred[i]);
  }
  return cm;
}

std::vector<double> per_class_f1(const ConfusionMatrix& cm) {
  const int k = cm.num_classes;
  std::vector<double> f1(k, 0.0);
  for (int c = 0; c < k; ++c) {
    std::uint64_t rowsum = 0;  // true class c
    std::uint64_t colsum = 0;  // predicted class c
    for (int j = 0; j < k; ++j) {
      rowsum += cm.at(c, j);
      colsum += cm.at(j, c);
    }
    const std::uint64_t tp = cm.at(c, c);
    const double precision =
        colsum == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(colsum);
    const double recall =
        rowsum == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(rowsum);
    f1[c] = precision + recall == 0.0
                ? 0.0
                : 2.0 * precision * recall / (precision + recall);
  }
  return f1;
}

double macro_f1(const ConfusionMatrix& cm) {
  const std::vector<double> f1 = per_class_f1(cm);
  double total = 0.0;
  for (const double v : f1) total += v;
  return total / static_cast<double>(cm.num_classes);
}

}  // namespace trapforge
