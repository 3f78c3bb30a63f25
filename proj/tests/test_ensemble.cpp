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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "trapforge/ensemble.hpp"
#include "trapforge/error.hpp"

using namespace trapforge;

namespace {

PredictionMatrix make_matrix(std::vector<std::string> ids, int k,
                             std::vector<double> probs) {
  PredictionMatrix pm;
  pm.ids = std::move(ids);
  pm.num_classes = k;
  pm.probs = std::move(probs);
  return pm;
}

}  // namespace

TEST_CASE("validation renormalizes near-1 rows and rejects bad ones") {
  PredictionMatrix ok = validate_predictions(
      make_matrix({"a"}, 2, {0.5, 0.5}));
  CHECK(ok.probs == std::vector<double>{0.5, 0.5});

  PredictionMatrix close = validate_predictions(
      make_matrix({"a"}, 2, {0.50004, 0.49997}));
  CHECK(std::fabs(close.row(0)[0] + close.row(0)[1] - 1.0) < 1e-12);
  CHECK(close.row(0)[0] == doctest::Approx(0.50004 / 1.00001).epsilon(1e-12));

  CHECK_THROWS_AS(validate_predictions(make_matrix({"a"}, 2, {0.7, 0.7})),
                  Error);
  CHECK_THROWS_AS(validate_predictions(make_matrix({"a"}, 2, {1.1, -0.1})),
                  Error);
  CHECK_THROWS_AS(
      validate_predictions(make_matrix({"a", "a"}, 2, {1, 0, 0, 1})), Error);
}

TEST_CASE("weight specs normalize and validate") {
  const EnsembleSpec uniform = EnsembleSpec::uniform(4);
  for (const double w : uniform.weights) {
    CHECK(w == doctest::Approx(0.25).epsilon(1e-15));
  }
  const EnsembleSpec scaled = EnsembleSpec::from_weights({2.0, 2.0});
  CHECK(scaled.weights == std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(EnsembleSpec::from_weights({0.0, 0.0}), Error);
  CHECK_THROWS_AS(EnsembleSpec::from_weights({-1.0, 2.0}), Error);
  CHECK_THROWS_AS(EnsembleSpec::from_weights({}), Error);
  CHECK_THROWS_AS(EnsembleSpec::uniform(0), Error);
}

TEST_CASE("weighted average follows the derived two-member examples") {
  const std::vector<PredictionMatrix> members = {
      make_matrix({"a"}, 2, {1.0, 0.0}),
      make_matrix({"a"}, 2, {0.0, 1.0}),
  };
  const PredictionMatrix even =
      weighted_average(members, EnsembleSpec::uniform(2));
  CHECK(even.row(0)[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(even.row(0)[1] == doctest::Approx(0.5).epsilon(1e-15));

  const PredictionMatrix skewed =
      weighted_average(members, EnsembleSpec::from_weights({0.75, 0.25}));
  CHECK(skewed.row(0)[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(skewed.row(0)[1] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("identical members are a fixed point under any weights") {
  const PredictionMatrix base =
      make_matrix({"a", "b"}, 3, {0.2, 0.3, 0.5, 1.0, 0.0, 0.0});
  const std::vector<PredictionMatrix> members = {base, base, base};
  const PredictionMatrix out =
      weighted_average(members, EnsembleSpec::from_weights({1.0, 2.0, 3.0}));
  for (std::size_t i = 0; i < base.probs.size(); ++i) {
    CHECK(out.probs[i] == doctest::Approx(base.probs[i]).epsilon(1e-15));
  }
}

TEST_CASE("members align by id, not row order") {
  const std::vector<PredictionMatrix> members = {
      make_matrix({"a", "b"}, 2, {1.0, 0.0, 0.0, 1.0}),
      make_matrix({"b", "a"}, 2, {0.0, 1.0, 1.0, 0.0}),
  };
  const PredictionMatrix out =
      weighted_average(members, EnsembleSpec::uniform(2));
  // Rows agree after alignment, so the average preserves them.
  CHECK(out.ids == std::vector<std::string>{"a", "b"});
  CHECK(out.row(0)[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(out.row(1)[1] == doctest::Approx(1.0).epsilon(1e-15));

  const std::vector<PredictionMatrix> mismatched = {
      make_matrix({"a"}, 2, {1.0, 0.0}),
      make_matrix({"c"}, 2, {1.0, 0.0}),
  };
  CHECK_THROWS_AS(weighted_average(mismatched, EnsembleSpec::uniform(2)),
                  Error);
  const std::vector<PredictionMatrix> wrong_k = {
      make_matrix({"a"}, 2, {1.0, 0.0}),
      make_matrix({"a"}, 3, {1.0, 0.0, 0.0}),
  };
  CHECK_THROWS_AS(weighted_average(wrong_k, EnsembleSpec::uniform(2)), Error);
}

TEST_CASE("averages stay inside member entry bounds and row-stochastic") {
  std::mt19937 gen(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = 20;
  const int k = 5;
  const int m = 4;
  std::vector<PredictionMatrix> members;
  for (int j = 0; j < m; ++j) {
    PredictionMatrix pm;
    pm.num_classes = k;
    for (int i = 0; i < n; ++i) {
      pm.ids.push_back("s" + std::to_string(i));
      std::vector<double> row(k);
      double total = 0.0;
      for (double& v : row) {
        v = unit(gen) + 1e-6;
        total += v;
      }
      for (double& v : row) pm.probs.push_back(v / total);
    }
    members.push_back(validate_predictions(std::move(pm)));
  }
  const PredictionMatrix out =
      weighted_average(members, EnsembleSpec::from_weights({1, 2, 3, 4}));
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
      const double v = out.row(i)[c];
      double lo = 1.0;
      double hi = 0.0;
      for (const PredictionMatrix& pm : members) {
        lo = std::min(lo, pm.row(i)[c]);
        hi = std::max(hi, pm.row(i)[c]);
      }
      CHECK(v >= lo - 1e-12);
      CHECK(v <= hi + 1e-12);
      total += v;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("argmax breaks ties toward the lowest class index") {
  const PredictionMatrix pm = make_matrix(
      {"a", "b", "c"}, 3,
      {0.1, 0.8, 0.1, 0.5, 0.5, 0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  const auto labels = argmax_labels(pm);
  CHECK(labels[0] == std::pair<std::string, int>{"a", 1});
  CHECK(labels[1] == std::pair<std::string, int>{"b", 0});
  CHECK(labels[2] == std::pair<std::string, int>{"c", 0});
}

TEST_CASE("permuting members together with weights changes nothing") {
  const std::vector<PredictionMatrix> ab = {
      make_matrix({"x"}, 2, {0.9, 0.1}),
      make_matrix({"x"}, 2, {0.2, 0.8}),
  };
  const std::vector<PredictionMatrix> ba = {ab[1], ab[0]};
  const PredictionMatrix first =
      weighted_average(ab, EnsembleSpec::from_weights({0.3, 0.7}));
  const PredictionMatrix second =
      weighted_average(ba, EnsembleSpec::from_weights({0.7, 0.3}));
  CHECK(first.row(0)[0] == doctest::Approx(second.row(0)[0]).epsilon(1e-15));
  CHECK(first.row(0)[1] == doctest::Approx(second.row(0)[1]).epsilon(1e-15));
}
