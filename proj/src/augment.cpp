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

#include "trapforge/augment.hpp"

#include <cmath>

#include "trapforge/image_ops.hpp"
#include "trapforge/regularizers.hpp"
#include "trapforge/rng.hpp"

namespace trapforge {

std::string_view step_kind_name(const AugmentStep& step) {
  if (std::holds_alternative<CropParams>(step.params)) return "crop";
  if (std::holds_alternative<RotateParams>(step.params)) return "rotate";
  if (std::holds_alternative<FlipParams>(step.params)) return "hflip";
  if (std::holds_alternative<BrightnessParams>(step.params)) return "brightness";
  if (std::holds_alternative<BlurParams>(step.params)) return "blur";
  if (std::holds_alternative<NoiseParams>(step.params)) return "noise";
  if (std::holds_alternative<GrayscaleParams>(step.params)) return "grayscale";
  if (std::holds_alternative<CutoutParams>(step.params)) return "cutout";
  return "clahe";
}

void validate(const AugmentStep& step) {
  require(std::isfinite(step.probability) && step.probability >= 0.0 &&
              step.probability <= 1.0,
          "step probability must be in [0,1], got ", step.probability);
  if (const auto* p = std::get_if<CropParams>(&step.params)) {
    require(p->width >= 1 && p->height >= 1,
            "crop size must be positive, got ", p->width, "x", p->height);
  } else if (const auto* p = std::get_if<RotateParams>(&step.params)) {
    require(std::isfinite(p->min_degrees) && std::isfinite(p->max_degrees) &&
                p->min_degrees <= p->max_degrees,
            "rotate range [", p->min_degrees, ",", p->max_degrees,
            "] is invalid");
  } else if (const auto* p = std::get_if<BrightnessParams>(&step.params)) {
    require(std::isfinite(p->min_factor) && std::isfinite(p->max_factor) &&
                0.0 <= p->min_factor && p->min_factor <= p->max_factor,
            "brightness range [", p->min_factor, ",", p->max_factor,
            "] is invalid");
  } else if (const auto* p = std::get_if<BlurParams>(&step.params)) {
    require(std::isfinite(p->min_sigma) && std::isfinite(p->max_sigma) &&
                0.0 <= p->min_sigma && p->min_sigma <= p->max_sigma,
            "blur sigma range [", p->min_sigma, ",", p->max_sigma,
            "] is invalid");
  } else if (const auto* p = std::get_if<NoiseParams>(&step.params)) {
    require(std::isfinite(p->min_sigma) && std::isfinite(p->max_sigma) &&
                0.0 <= p->min_sigma && p->min_sigma <= p->max_sigma,
            "noise sigma range [", p->min_sigma, ",", p->max_sigma,
            "] is invalid");
  } else if (const auto* p = std::get_if<CutoutParams>(&step.params)) {
    require(p->size >= 0, "cutout size must be >= 0, got ", p->size);
  } else if (const auto* p = std::get_if<ClaheConfig>(&step.params)) {
    require(p->grid_w >= 1 && p->grid_h >= 1,
            "clahe grid dimensions must be >= 1");
    require(std::isfinite(p->clip_factor) && p->clip_factor >= 1.0,
            "clahe clip factor must be >= 1, got ", p->clip_factor);
    require(p->bins == 256, "clahe needs 256 bins on 8-bit images, got ",
            p->bins);
  }
}

namespace {

// Stream discipline per step: one uniform draw decides firing, then ranged
// parameters draw in declared order, then one u64 seeds ops that take their
// own Seed. Fixed consumption keeps outputs stable when probabilities change
// elsewhere in the pipeline.
ImageBuffer apply_step(ImageBuffer img, const AugmentStep& step,
                       SampleRng& rng) {
  if (const auto* p = std::get_if<CropParams>(&step.params)) {
    return random_crop(img, p->width, p->height, Seed{rng.next_u64()});
  }
  if (const auto* p = std::get_if<RotateParams>(&step.params)) {
    const double degrees = rng.uniform_real(p->min_degrees, p->max_degrees);
    return rotate(img, degrees, p->fill);
  }
  if (std::holds_alternative<FlipParams>(step.params)) {
    return horizontal_flip(img);
  }
  if (const auto* p = std::get_if<BrightnessParams>(&step.params)) {
    return adjust_brightness(img, rng.uniform_real(p->min_factor, p->max_factor));
  }
  if (const auto* p = std::get_if<BlurParams>(&step.params)) {
    return gaussian_blur(img, rng.uniform_real(p->min_sigma, p->max_sigma));
  }
  if (const auto* p = std::get_if<NoiseParams>(&step.params)) {
    const double sigma = rng.uniform_real(p->min_sigma, p->max_sigma);
    return add_gaussian_noise(img, sigma, Seed{rng.next_u64()});
  }
  if (std::holds_alternative<GrayscaleParams>(step.params)) {
    return to_grayscale(img);
  }
  if (const auto* p = std::get_if<CutoutParams>(&step.params)) {
    return cutout(img, p->size, p->fill, Seed{rng.next_u64()});
  }
  return apply_clahe(img, std::get<ClaheConfig>(step.params));
}

}  // namespace

ImageBuffer apply_pipeline(ImageBuffer img,
                           const std::vector<AugmentStep>& steps, Seed seed,
                           std::string_view sample_id,
                           std::vector<bool>* fired) {
  validate(img);
  if (fired != nullptr) fired->assign(steps.size(), false);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const AugmentStep& step = steps[i];
    validate(step);
    SampleRng rng(derive_stream(seed.value, sample_id, i));
    if (rng.next_double() >= step.probability) continue;
    if (fired != nullptr) (*fired)[i] = true;
    img = apply_step(std::move(img), step, rng);
  }
  return img;
}

}  // namespace trapforge
