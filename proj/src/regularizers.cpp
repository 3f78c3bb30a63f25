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

#include "trapforge/regularizers.hpp"

#include <cmath>
#include <unordered_set>

#include "trapforge/rng.hpp"

namespace trapforge {

ClassSet ClassSet::create(std::vector<std::string> names) {
  require(names.size() >= 2, "a class set needs at least 2 classes, got ",
          names.size());
  std::unordered_set<std::string> seen;
  for (const std::string& name : names) {
    require(!name.empty(), "class names must be non-empty");
    require(seen.insert(name).second, "duplicate class name \"", name, "\"");
  }
  ClassSet cs;
  cs.names = std::move(names);
  return cs;
}

int ClassSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

SoftLabel SoftLabel::one_hot(int y, int num_classes) {
  require(num_classes >= 2, "one_hot needs at least 2 classes");
  require(y >= 0 && y < num_classes, "class index ", y,
          " out of range for K=", num_classes);
  SoftLabel label;
  label.probs.assign(num_classes, 0.0);
  label.probs[y] = 1.0;
  return label;
}

void validate(const SoftLabel& label) {
  require(!label.probs.empty(), "soft label is empty");
  double total = 0.0;
  for (const double p : label.probs) {
    require(std::isfinite(p) && p >= 0.0,
            "soft label entries must be finite and non-negative, got ", p);
    total += p;
  }
  require(std::fabs(total - 1.0) <= 1e-9, "soft label sums to ", total,
          ", expected 1");
}

SoftLabel smooth_labels(int y, const ClassSet& cs,
                        const SmoothingConfig& cfg) {
  const int k = cs.size();
  require(y >= 0 && y < k, "class index ", y, " out of range for K=", k);
  require(cfg.epsilon >= 0.0 && cfg.epsilon < 1.0,
          "smoothing epsilon must be in [0,1), got ", cfg.epsilon);
  SoftLabel label;
  label.probs.assign(k, cfg.epsilon / k);
  label.probs[y] = 1.0 - cfg.epsilon + cfg.epsilon / k;
  return label;
}

double cross_entropy(const SoftLabel& target, const SoftLabel& pred) {
  require(target.probs.size() == pred.probs.size(),
          "label length mismatch: ", target.probs.size(), " vs ",
          pred.probs.size());
  double h = 0.0;
  for (std::size_t k = 0; k < target.probs.size(); ++k) {
    h -= target.probs[k] * std::log(std::max(pred.probs[k], 1e-12));
  }
  return h;
}

ImageBuffer cutout(const ImageBuffer& img, int size, std::uint8_t fill,
                   Seed seed) {
  validate(img);
  require(size >= 0, "cutout size must be >= 0, got ", size);
  if (size == 0) return img;
  SampleRng rng(seed.value);
  const int cx = static_cast<int>(rng.uniform_int(img.width));
  const int cy = static_cast<int>(rng.uniform_int(img.height));
  // The square may hang over the border; only the intersection is filled.
  const int x0 = std::max(cx - size / 2, 0);
  const int y0 = std::max(cy - size / 2, 0);
  const int x1 = std::min(cx - size / 2 + size, img.width);
  const int y1 = std::min(cy - size / 2 + size, img.height);
  ImageBuffer out = img;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = fill;
      }
    }
  }
  return out;
}

MixupDraw sample_mixup_lambda(double alpha, Seed seed) {
  require(std::isfinite(alpha) && alpha > 0.0,
          "mixup alpha must be positive, got ", alpha);
  SampleRng rng(seed.value);
  MixupDraw draw;
  draw.alpha = alpha;
  draw.lambda = rng.beta(alpha, alpha);
  return draw;
}

std::pair<ImageBuffer, SoftLabel> mixup_blend(const ImageBuffer& xi,
                                              const SoftLabel& yi,
                                              const ImageBuffer& xj,
                                              const SoftLabel& yj,
                                              double lambda) {
  validate(xi);
  validate(xj);
  require(xi.same_shape(xj), "mixup images differ in shape: ", xi.width, "x",
          xi.height, "x", xi.channels, " vs ", xj.width, "x", xj.height, "x",
          xj.channels);
  require(yi.probs.size() == yj.probs.size(), "mixup labels differ in length: ",
          yi.probs.size(), " vs ", yj.probs.size());
  require(lambda >= 0.0 && lambda <= 1.0, "lambda must be in [0,1], got ",
          lambda);
  ImageBuffer xm = ImageBuffer::create(xi.width, xi.height, xi.channels);
  for (std::size_t i = 0; i < xm.pixels.size(); ++i) {
    // Blend in real arithmetic, quantize once.
    xm.pixels[i] =
        round_to_u8(lambda * xi.pixels[i] + (1.0 - lambda) * xj.pixels[i]);
  }
  SoftLabel ym;
  ym.probs.resize(yi.probs.size());
  for (std::size_t k = 0; k < ym.probs.size(); ++k) {
    ym.probs[k] = lambda * yi.probs[k] + (1.0 - lambda) * yj.probs[k];
  }
  return {std::move(xm), std::move(ym)};
}

}  // namespace trapforge
