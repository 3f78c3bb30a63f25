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

#include "trapforge/ensemble.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "trapforge/error.hpp"

namespace trapforge {

EnsembleSpec EnsembleSpec::uniform(std::size_t members) {
  require(members >= 1, "an ensemble needs at least one member");
  EnsembleSpec spec;
  spec.weights.assign(members, 1.0 / static_cast<double>(members));
  return spec;
}

EnsembleSpec EnsembleSpec::from_weights(std::vector<double> raw) {
  require(!raw.empty(), "an ensemble needs at least one weight");
  double total = 0.0;
  for (const double w : raw) {
    require(std::isfinite(w) && w >= 0.0,
            "weights must be finite and non-negative, got ", w);
    total += w;
  }
  require(total > 0.0, "weights must not all be zero");
  for (double& w : raw) w /= total;
  EnsembleSpec spec;
  spec.weights = std::move(raw);
  return spec;
}

PredictionMatrix validate_predictions(PredictionMatrix pm) {
  require(pm.num_classes >= 1, "prediction matrix has no classes");
  require(pm.probs.size() ==
              pm.ids.size() * static_cast<std::size_t>(pm.num_classes),
          "prediction matrix shape mismatch");
  std::unordered_set<std::string> seen;
  for (const std::string& id : pm.ids) {
    require(seen.insert(id).second, "duplicate sample id \"", id, "\"");
  }
  for (std::size_t i = 0; i < pm.rows(); ++i) {
    auto row = pm.row(i);
    double total = 0.0;
    for (const double p : row) {
      require(std::isfinite(p) && p >= 0.0, "sample \"", pm.ids[i],
              "\": probabilities must be finite and non-negative, got ", p);
      total += p;
    }
    require(std::fabs(total - 1.0) <= 1e-3, "sample \"", pm.ids[i],
            "\": row sums to ", total, ", outside tolerance 1e-3 around 1");
    for (double& p : row) p /= total;
  }
  return pm;
}

PredictionMatrix weighted_average(std::span<const PredictionMatrix> members,
                                  const EnsembleSpec& spec) {
  require(!members.empty(), "weighted_average needs at least one matrix");
  require(members.size() == spec.members(), "got ", members.size(),
          " matrices but ", spec.members(), " weights");

  const PredictionMatrix& first = members[0];
  PredictionMatrix out;
  out.ids = first.ids;
  out.num_classes = first.num_classes;
  out.probs.assign(first.probs.size(), 0.0);

  // Row lookup per member; output rows follow the first member's order.
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(first.rows());
  for (std::size_t i = 0; i < first.rows(); ++i) index.emplace(first.ids[i], i);

  for (std::size_t m = 0; m < members.size(); ++m) {
    const PredictionMatrix& pm = members[m];
    require(pm.num_classes == first.num_classes, "member ", m + 1, " has ",
            pm.num_classes, " classes, expected ", first.num_classes);
    require(pm.rows() == first.rows(), "member ", m + 1, " has ", pm.rows(),
            " rows, expected ", first.rows());
    const double w = spec.weights[m];
    for (std::size_t r = 0; r < pm.rows(); ++r) {
      const auto it = index.find(pm.ids[r]);
      require(it != index.end(), "member ", m + 1, ": sample id \"",
              pm.ids[r], "\" is missing from the first member");
      auto src = pm.row(r);
      auto dst = out.row(it->second);
      for (int k = 0; k < pm.num_classes; ++k) dst[k] += w * src[k];
    }
  }
  return out;
}

std::vector<std::pair<std::string, int>> argmax_labels(
    const PredictionMatrix& pm) {
  std::vector<std::pair<std::string, int>> labels;
  labels.reserve(pm.rows());
  for (std::size_t i = 0; i < pm.rows(); ++i) {
    auto row = pm.row(i);
    int best = 0;
    for (int k = 1; k < pm.num_classes; ++k) {
      // Strict comparison keeps the lowest index on ties.
      if (row[k] > row[best]) best = k;
    }
    labels.emplace_back(pm.ids[i], best);
  }
  return labels;
}

}  // namespace trapforge
