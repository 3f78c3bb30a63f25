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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trapforge/clahe.hpp"
#include "trapforge/image.hpp"

namespace trapforge {

// Per-kind step parameters. Ranged parameters draw uniformly from
// [min, max] on the step's stream each time the step fires.
struct CropParams {
  int width = 0;
  int height = 0;
};
struct RotateParams {
  double min_degrees = -15.0;
  double max_degrees = 15.0;
  std::uint8_t fill = 0;
};
struct FlipParams {};
struct BrightnessParams {
  double min_factor = 0.7;
  double max_factor = 1.3;
};
struct BlurParams {
  double min_sigma = 0.0;
  double max_sigma = 1.5;
};
struct NoiseParams {
  double min_sigma = 0.0;
  double max_sigma = 10.0;
};
struct GrayscaleParams {};
struct CutoutParams {
  int size = 16;
  std::uint8_t fill = 0;
};

using StepParams =
    std::variant<CropParams, RotateParams, FlipParams, BrightnessParams,
                 BlurParams, NoiseParams, GrayscaleParams, CutoutParams,
                 ClaheConfig>;

/// One step of an augmentation pipeline: fires with the given probability on
/// the per-sample stream, then applies its transform.
struct AugmentStep {
  double probability = 1.0;
  StepParams params;
};

/// "crop", "rotate", "hflip", "brightness", "blur", "noise", "grayscale",
/// "cutout" or "clahe".
std::string_view step_kind_name(const AugmentStep& step);

void validate(const AugmentStep& step);

/// Applies the steps in order. Step i of sample sample_id draws from the
/// stream derive_stream(seed, sample_id, i): first the firing decision, then
/// any ranged parameters in declared order, then one child seed for ops that
/// take their own Seed. Output depends only on (img, steps, seed,
/// sample_id), never on batch composition or scheduling. If fired is given
/// it receives one flag per step.
ImageBuffer apply_pipeline(ImageBuffer img,
                           const std::vector<AugmentStep>& steps, Seed seed,
                           std::string_view sample_id,
                           std::vector<bool>* fired = nullptr);

}  // namespace trapforge
