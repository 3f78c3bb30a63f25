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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trapforge/batch.hpp"
#include "trapforge/error.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"trapforge: batch camera-trap image preprocessing and "
               "evaluation toolkit"};
  app.require_subcommand(1);

  trapforge::AugmentOptions aug;
  std::string aug_manifest;
  std::string aug_config;
  std::string aug_out;
  CLI::App* augment =
      app.add_subcommand("augment", "Run a seeded augmentation pipeline over "
                                    "a manifest of images");
  augment->footer(
      "Config step defaults (rotation -15..15 deg, brightness 0.7-1.3, blur "
      "sigma 0-1.5, noise sigma 0-10, cutout size 16, CLAHE 8x8 grid / clip "
      "4.0) are conventional choices, not values tuned on any dataset.");
  augment->add_option("--manifest", aug_manifest, "Manifest CSV (id,path[,label,...])")
      ->required();
  augment->add_option("--config", aug_config, "Pipeline config JSON")
      ->required();
  CLI::Option* seed_opt = augment->add_option(
      "--seed", aug.seed, "Run seed; overrides the config seed");
  augment->add_option("--out", aug_out, "Output directory")->required();
  augment->add_flag("--strict,!--no-strict", aug.strict,
                    "Abort on the first unreadable image instead of "
                    "recording it and continuing (default: strict)");
  augment->add_option("--workers", aug.workers,
                      "Parallel worker threads (results are identical for "
                      "any count)")
      ->check(CLI::PositiveNumber);

  std::string eval_pred;
  std::string eval_truth;
  std::string eval_classes;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score argmax predictions against a labeled manifest "
                  "(per-class F1 and macro-F1)");
  evaluate->add_option("--pred", eval_pred, "Prediction CSV (id,<class...>)")
      ->required();
  evaluate->add_option("--truth", eval_truth, "Labeled manifest CSV")
      ->required();
  evaluate
      ->add_option("--classes", eval_classes,
                   "Class set: train14, full23, or a file with one class "
                   "name per line")
      ->required();

  std::vector<std::string> ens_preds;
  std::string ens_weights;
  std::string ens_out;
  CLI::App* ensemble = app.add_subcommand(
      "ensemble", "Weighted-average several prediction CSVs into one");
  ensemble
      ->add_option("--pred", ens_preds,
                   "Prediction CSVs (repeat or pass several)")
      ->required()
      ->take_all();
  ensemble->add_option("--weights", ens_weights,
                       "Comma-separated member weights (default uniform); "
                       "normalized to sum 1");
  ensemble->add_option("--out", ens_out, "Output prediction CSV")->required();

  CLI11_PARSE(app, argc, argv);

  if (augment->parsed()) {
    aug.manifest_path = aug_manifest;
    aug.config_path = aug_config;
    aug.out_dir = aug_out;
    aug.seed_from_cli = seed_opt->count() > 0;
    const trapforge::AugmentReport report = trapforge::run_augment(aug);
    std::cout << "seed " << report.seed << "\n"
              << "records " << report.total << "\n"
              << "succeeded " << report.succeeded << "\n"
              << "failed " << report.failed << "\n";
    if (report.mixup_outputs > 0) {
      std::cout << "mixup_outputs " << report.mixup_outputs << "\n";
    }
    for (std::size_t s = 0; s < report.step_kinds.size(); ++s) {
      const double rate = report.succeeded == 0
                              ? 0.0
                              : static_cast<double>(report.step_fired[s]) /
                                    static_cast<double>(report.succeeded);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", rate);
      std::cout << "step " << s << " " << report.step_kinds[s]
                << " fire_rate " << buf << "\n";
    }
    std::cout << "report " << (aug.out_dir / "report.json").string() << "\n";
    return 0;
  }

  if (evaluate->parsed()) {
    const trapforge::EvaluateResult result =
        trapforge::run_evaluate(eval_pred, eval_truth, eval_classes);
    trapforge::print_evaluate_result(result, std::cout);
    return 0;
  }

  trapforge::EnsembleOptions ens;
  for (const std::string& p : ens_preds) ens.pred_paths.emplace_back(p);
  if (!ens_weights.empty()) {
    std::size_t begin = 0;
    while (begin <= ens_weights.size()) {
      std::size_t comma = ens_weights.find(',', begin);
      if (comma == std::string::npos) comma = ens_weights.size();
      const std::string token = ens_weights.substr(begin, comma - begin);
      try {
        std::size_t used = 0;
        const double w = std::stod(token, &used);
        trapforge::require(used == token.size(), "trailing characters");
        ens.weights.push_back(w);
      } catch (const std::exception&) {
        trapforge::fail("--weights: \"", token, "\" is not a number");
      }
      begin = comma + 1;
    }
  }
  ens.out_path = ens_out;
  const trapforge::EnsembleSpec spec = trapforge::run_ensemble(ens);
  std::cout << "members " << ens.pred_paths.size() << "\n";
  std::cout << "weights";
  for (const double w : spec.weights) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", w);
    std::cout << ' ' << buf;
  }
  std::cout << "\nwrote " << ens.out_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "trapforge: error: " << e.what() << std::endl;
    return 1;
  }
}
