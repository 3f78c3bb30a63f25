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

#include "trapforge/pipeline_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trapforge/class_presets.hpp"
#include "trapforge/error.hpp"

namespace trapforge {

namespace {

using nlohmann::json;

double get_double(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  require(obj[key].is_number(), "config: \"", key, "\" must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  require(obj[key].is_number_integer(), "config: \"", key,
          "\" must be an integer");
  return obj[key].get<int>();
}

std::uint8_t get_fill(const json& obj, const char* key, std::uint8_t fallback) {
  const int v = get_int(obj, key, fallback);
  require(v >= 0 && v <= 255, "config: \"", key, "\" must be in [0,255], got ",
          v);
  return static_cast<std::uint8_t>(v);
}

AugmentStep parse_step(const json& item, std::size_t index) {
  require(item.is_object(), "config: steps[", index, "] must be an object");
  require(item.contains("kind") && item["kind"].is_string(), "config: steps[",
          index, "] needs a string \"kind\"");
  const std::string kind = item["kind"].get<std::string>();

  AugmentStep step;
  step.probability = get_double(item, "probability", 1.0);
  if (kind == "crop") {
    CropParams p;
    require(item.contains("width") && item.contains("height"),
            "config: crop step needs \"width\" and \"height\"");
    p.width = get_int(item, "width", 0);
    p.height = get_int(item, "height", 0);
    step.params = p;
  } else if (kind == "rotate") {
    RotateParams p;
    p.min_degrees = get_double(item, "min_degrees", p.min_degrees);
    p.max_degrees = get_double(item, "max_degrees", p.max_degrees);
    p.fill = get_fill(item, "fill", p.fill);
    step.params = p;
  } else if (kind == "hflip") {
    step.params = FlipParams{};
  } else if (kind == "brightness") {
    BrightnessParams p;
    p.min_factor = get_double(item, "min_factor", p.min_factor);
    p.max_factor = get_double(item, "max_factor", p.max_factor);
    step.params = p;
  } else if (kind == "blur") {
    BlurParams p;
    p.min_sigma = get_double(item, "min_sigma", p.min_sigma);
    p.max_sigma = get_double(item, "max_sigma", p.max_sigma);
    step.params = p;
  } else if (kind == "noise") {
    NoiseParams p;
    p.min_sigma = get_double(item, "min_sigma", p.min_sigma);
    p.max_sigma = get_double(item, "max_sigma", p.max_sigma);
    step.params = p;
  } else if (kind == "grayscale") {
    step.params = GrayscaleParams{};
  } else if (kind == "cutout") {
    CutoutParams p;
    p.size = get_int(item, "size", p.size);
    p.fill = get_fill(item, "fill", p.fill);
    step.params = p;
  } else if (kind == "clahe") {
    ClaheConfig p;
    p.grid_w = get_int(item, "grid_w", p.grid_w);
    p.grid_h = get_int(item, "grid_h", p.grid_h);
    p.clip_factor = get_double(item, "clip_factor", p.clip_factor);
    step.params = p;
  } else {
    fail("config: steps[", index, "] has unknown kind \"", kind, "\"");
  }
  validate(step);
  return step;
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  require(!root.is_discarded(), "config is not valid JSON");
  require(root.is_object(), "config root must be a JSON object");

  PipelineConfig cfg;
  if (root.contains("seed")) {
    require(root["seed"].is_number_unsigned(),
            "config: \"seed\" must be a non-negative integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }

  if (root.contains("classes")) {
    const json& classes = root["classes"];
    if (classes.is_string()) {
      cfg.class_set = resolve_class_set(classes.get<std::string>());
    } else if (classes.is_array()) {
      std::vector<std::string> names;
      for (const json& name : classes) {
        require(name.is_string(), "config: \"classes\" entries must be strings");
        names.push_back(name.get<std::string>());
      }
      cfg.class_set = ClassSet::create(std::move(names));
    } else {
      fail("config: \"classes\" must be a preset name, file path, or array");
    }
  } else {
    cfg.class_set = train14_classes();
  }

  if (root.contains("smoothing")) {
    const json& sm = root["smoothing"];
    require(sm.is_object(), "config: \"smoothing\" must be an object");
    cfg.smoothing.epsilon = get_double(sm, "epsilon", cfg.smoothing.epsilon);
    require(cfg.smoothing.epsilon >= 0.0 && cfg.smoothing.epsilon < 1.0,
            "config: smoothing epsilon must be in [0,1), got ",
            cfg.smoothing.epsilon);
  }

  if (root.contains("mixup")) {
    const json& mx = root["mixup"];
    require(mx.is_object(), "config: \"mixup\" must be an object");
    if (mx.contains("enabled")) {
      require(mx["enabled"].is_boolean(),
              "config: mixup \"enabled\" must be a boolean");
      cfg.mixup_enabled = mx["enabled"].get<bool>();
    }
    cfg.mixup_alpha = get_double(mx, "alpha", cfg.mixup_alpha);
    require(cfg.mixup_alpha > 0.0, "config: mixup alpha must be positive, got ",
            cfg.mixup_alpha);
  }

  if (root.contains("steps")) {
    require(root["steps"].is_array(), "config: \"steps\" must be an array");
    std::size_t index = 0;
    for (const json& item : root["steps"]) {
      cfg.steps.push_back(parse_step(item, index));
      ++index;
    }
  }
  return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open config ", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pipeline_config(buffer.str());
}

}  // namespace trapforge
