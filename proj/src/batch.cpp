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

#include "trapforge/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "trapforge/class_presets.hpp"
#include "trapforge/image_io.hpp"
#include "trapforge/manifest.hpp"
#include "trapforge/prediction_io.hpp"
#include "trapforge/rng.hpp"

namespace trapforge {

namespace {

// Output file for a record, relative to out_dir. Ids may carry
// subdirectories; parents are created on demand.
std::string output_name(const std::string& id) { return id + ".png"; }

void save_output(const ImageBuffer& img, const std::filesystem::path& out_dir,
                 const std::string& name) {
  const std::filesystem::path path = out_dir / name;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  save_png(img, path);
}

// Uniform random permutation without fixed points, by rejection. n >= 2.
std::vector<std::size_t> random_derangement(std::size_t n, SampleRng& rng) {
  std::vector<std::size_t> perm(n);
  for (;;) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = n - 1; k > 0; --k) {
      std::swap(perm[k], perm[rng.uniform_int(k + 1)]);
    }
    bool has_fixed_point = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] == i) {
        has_fixed_point = true;
        break;
      }
    }
    if (!has_fixed_point) return perm;
  }
}

void run_mixup_phase(const AugmentOptions& opts, const PipelineConfig& cfg,
                     const std::vector<ManifestRecord>& records,
                     std::uint64_t seed, AugmentReport& report) {
  // Only records that produced a base output participate.
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (report.records[i].error.empty()) pool.push_back(i);
  }
  require(pool.size() >= 2, "mixup needs at least 2 augmented images, have ",
          pool.size());
  for (const std::size_t i : pool) {
    require(records[i].label.has_value(), "mixup needs labels; record \"",
            records[i].id, "\" has none");
  }

  SampleRng pairing_rng(derive_stream(seed, "", kMixupPairingStream));
  const std::vector<std::size_t> perm =
      random_derangement(pool.size(), pairing_rng);

  PredictionMatrix labels;
  labels.num_classes = cfg.class_set.size();
  for (std::size_t a = 0; a < pool.size(); ++a) {
    const ManifestRecord& ri = records[pool[a]];
    const ManifestRecord& rj = records[pool[perm[a]]];
    const int yi = cfg.class_set.find(*ri.label);
    const int yj = cfg.class_set.find(*rj.label);
    require(yi >= 0, "record \"", ri.id, "\": label \"", *ri.label,
            "\" is not in the class set");
    require(yj >= 0, "record \"", rj.id, "\": label \"", *rj.label,
            "\" is not in the class set");

    const ImageBuffer xi =
        load_image(opts.out_dir / report.records[pool[a]].output);
    const ImageBuffer xj =
        load_image(opts.out_dir / report.records[pool[perm[a]]].output);
    const MixupDraw draw = sample_mixup_lambda(
        cfg.mixup_alpha,
        Seed{derive_stream(seed, ri.id, kMixupLambdaStream)});
    auto [xm, ym] =
        mixup_blend(xi, smooth_labels(yi, cfg.class_set, cfg.smoothing), xj,
                    smooth_labels(yj, cfg.class_set, cfg.smoothing),
                    draw.lambda);

    RecordReport rec;
    rec.id = ri.id + "_mix";
    rec.output = output_name(rec.id);
    rec.mixup_partner = rj.id;
    rec.mixup_lambda = draw.lambda;
    save_output(xm, opts.out_dir, rec.output);
    labels.ids.push_back(rec.id);
    labels.probs.insert(labels.probs.end(), ym.probs.begin(), ym.probs.end());
    report.records.push_back(std::move(rec));
    ++report.mixup_outputs;
  }
  write_predictions(labels, cfg.class_set, opts.out_dir / "mixup_labels.csv");
}

}  // namespace

AugmentReport run_augment(const AugmentOptions& opts) {
  const std::vector<ManifestRecord> records = load_manifest(opts.manifest_path);
  const PipelineConfig cfg = load_pipeline_config(opts.config_path);
  const std::uint64_t seed =
      opts.seed_from_cli ? opts.seed : cfg.seed.value_or(0);
  std::filesystem::create_directories(opts.out_dir);

  AugmentReport report;
  report.seed = seed;
  report.total = records.size();
  for (const AugmentStep& step : cfg.steps) {
    report.step_kinds.emplace_back(step_kind_name(step));
  }
  report.step_fired.assign(cfg.steps.size(), 0);
  report.records.resize(records.size());

  std::vector<std::vector<bool>> fired(records.size());
  const int workers =
      std::max(1, std::min(opts.workers, static_cast<int>(records.size())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= records.size()) return;
      RecordReport& rec = report.records[i];
      rec.id = records[i].id;
      try {
        ImageBuffer img = load_image(records[i].path);
        img = apply_pipeline(std::move(img), cfg.steps, Seed{seed},
                             records[i].id, &fired[i]);
        rec.output = output_name(rec.id);
        save_output(img, opts.out_dir, rec.output);
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    RecordReport& rec = report.records[i];
    if (!rec.error.empty()) {
      ++report.failed;
      // Strict runs abort on the lowest-index failure so the error does not
      // depend on worker scheduling.
      require(!opts.strict, "record \"", rec.id, "\": ", rec.error);
      continue;
    }
    ++report.succeeded;
    for (std::size_t s = 0; s < fired[i].size(); ++s) {
      if (fired[i][s]) {
        ++report.step_fired[s];
        report.records[i].steps_applied.emplace_back(report.step_kinds[s]);
      }
    }
  }

  if (cfg.mixup_enabled) {
    run_mixup_phase(opts, cfg, records, seed, report);
  }
  write_report_json(report, opts.out_dir / "report.json");
  return report;
}

void write_report_json(const AugmentReport& report,
                       const std::filesystem::path& path) {
  nlohmann::ordered_json root;
  root["seed"] = report.seed;
  root["total"] = report.total;
  root["succeeded"] = report.succeeded;
  root["failed"] = report.failed;
  root["mixup_outputs"] = report.mixup_outputs;

  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < report.step_kinds.size(); ++s) {
    nlohmann::ordered_json step;
    step["kind"] = report.step_kinds[s];
    step["fired"] = report.step_fired[s];
    step["rate"] = report.succeeded == 0
                       ? 0.0
                       : static_cast<double>(report.step_fired[s]) /
                             static_cast<double>(report.succeeded);
    steps.push_back(std::move(step));
  }
  root["steps"] = std::move(steps);

  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const RecordReport& rec : report.records) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    if (!rec.error.empty()) {
      r["error"] = rec.error;
    } else {
      r["output"] = rec.output;
      if (!rec.mixup_partner.empty()) {
        r["partner"] = rec.mixup_partner;
        r["lambda"] = rec.mixup_lambda;
      } else {
        r["steps"] = rec.steps_applied;
      }
    }
    recs.push_back(std::move(r));
  }
  root["records"] = std::move(recs);

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot open ", tmp.string(), " for writing");
    out << root.dump(2) << '\n';
    out.flush();
    require(out.good(), "failed writing ", tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  require(!ec, "cannot rename ", tmp.string(), " to ", path.string(), ": ",
          ec.message());
}

EvaluateResult run_evaluate(const std::filesystem::path& pred_path,
                            const std::filesystem::path& truth_path,
                            const std::string& classes_arg) {
  EvaluateResult result;
  result.classes = resolve_class_set(classes_arg);
  const std::vector<ManifestRecord> records = load_manifest(truth_path);
  const PredictionMatrix pm = read_predictions(pred_path, result.classes);

  std::unordered_map<std::string, std::size_t> pred_rows;
  pred_rows.reserve(pm.rows());
  for (std::size_t i = 0; i < pm.rows(); ++i) pred_rows.emplace(pm.ids[i], i);

  auto list_ids = [](const std::vector<std::string>& ids) {
    std::string joined;
    const std::size_t shown = std::min<std::size_t>(ids.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      if (i > 0) joined += ", ";
      joined += ids[i];
    }
    if (ids.size() > shown) joined += ", ...";
    return joined;
  };
  std::vector<std::string> missing;
  std::unordered_set<std::string> truth_ids;
  for (const ManifestRecord& rec : records) {
    truth_ids.insert(rec.id);
    if (pred_rows.find(rec.id) == pred_rows.end()) missing.push_back(rec.id);
  }
  require(missing.empty(), missing.size(),
          " manifest id(s) missing from predictions: ", list_ids(missing));
  std::vector<std::string> extra;
  for (const std::string& id : pm.ids) {
    if (truth_ids.find(id) == truth_ids.end()) extra.push_back(id);
  }
  require(extra.empty(), extra.size(),
          " prediction id(s) missing from the manifest: ", list_ids(extra));

  const std::vector<std::pair<std::string, int>> pred_labels =
      argmax_labels(pm);
  std::vector<int> truth;
  std::vector<int> pred;
  truth.reserve(records.size());
  pred.reserve(records.size());
  for (const ManifestRecord& rec : records) {
    require(rec.label.has_value(), "manifest record \"", rec.id,
            "\" has no label");
    const int y = result.classes.find(*rec.label);
    require(y >= 0, "record \"", rec.id, "\": label \"", *rec.label,
            "\" is not in the class set");
    truth.push_back(y);
    pred.push_back(pred_labels[pred_rows.at(rec.id)].second);
  }

  result.confusion = confusion_matrix(truth, pred, result.classes);
  result.per_class_f1 = per_class_f1(result.confusion);
  result.macro_f1 = macro_f1(result.confusion);
  result.num_samples = records.size();
  return result;
}

void print_evaluate_result(const EvaluateResult& result, std::ostream& os) {
  std::size_t width = std::string("macro_f1").size();
  for (const std::string& name : result.classes.names) {
    width = std::max(width, name.size());
  }
  os << std::left << std::setw(static_cast<int>(width) + 2) << "class"
     << "f1\n";
  os << std::fixed << std::setprecision(6);
  for (int k = 0; k < result.classes.size(); ++k) {
    os << std::setw(static_cast<int>(width) + 2) << result.classes.names[k]
       << result.per_class_f1[k] << '\n';
  }
  os << std::setw(static_cast<int>(width) + 2) << "macro_f1"
     << result.macro_f1 << '\n';
  os << std::setw(static_cast<int>(width) + 2) << "samples"
     << result.num_samples << '\n';
}

EnsembleSpec run_ensemble(const EnsembleOptions& opts) {
  require(!opts.pred_paths.empty(), "ensemble needs at least one prediction file");
  const ClassSet cs = ClassSet::create(read_prediction_header(opts.pred_paths[0]));
  std::vector<PredictionMatrix> members;
  members.reserve(opts.pred_paths.size());
  for (const std::filesystem::path& p : opts.pred_paths) {
    members.push_back(read_predictions(p, cs));
  }
  const EnsembleSpec spec =
      opts.weights.empty() ? EnsembleSpec::uniform(members.size())
                           : EnsembleSpec::from_weights(opts.weights);
  require(spec.members() == members.size(), "got ", members.size(),
          " prediction files but ", spec.members(), " weights");
  const PredictionMatrix out = weighted_average(members, spec);
  write_predictions(out, cs, opts.out_path);
  return spec;
}

}  // namespace trapforge
