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
#include <utility>
#include <vector>

#include "trapforge/image.hpp"

namespace trapforge {

/// Ordered set of class labels. At least 2 classes, names unique.
struct ClassSet {
  std::vector<std::string> names;

  static ClassSet create(std::vector<std::string> names);

  int size() const { return static_cast<int>(names.size()); }
  /// Index of name, or -1.
  int find(const std::string& name) const;
};

/// Probability vector over the class set: entries >= 0, sum 1 within 1e-9.
struct SoftLabel {
  std::vector<double> probs;

  static SoftLabel one_hot(int y, int num_classes);
};

void validate(const SoftLabel& label);

struct SmoothingConfig {
  double epsilon = 0.1;  // in [0, 1)
};

struct MixupDraw {
  double lambda = 0.0;  // in [0, 1]
  double alpha = 0.0;   // Beta concentration used for the draw
};

/// q'(k) = (1 - eps) * [k == y] + eps / K.
SoftLabel smooth_labels(int y, const ClassSet& cs, const SmoothingConfig& cfg);

/// -sum_k target[k] * ln(max(pred[k], 1e-12)). The floor keeps zero
/// predictions finite.
double cross_entropy(const SoftLabel& target, const SoftLabel& pred);

/// Masks a square region with the fill value on all channels. The mask
/// center is drawn uniformly over all pixel positions (x before y); the
/// size x size square whose top-left is center - size/2 is clipped to the
/// image bounds, so the mask may be partially outside. size = 0 is a copy.
ImageBuffer cutout(const ImageBuffer& img, int size, std::uint8_t fill,
                   Seed seed);

/// lambda ~ Beta(alpha, alpha) from the seeded stream.
MixupDraw sample_mixup_lambda(double alpha, Seed seed);

/// Virtual sample: pixels blend in real arithmetic and round once,
/// x~ = round(lambda*xi + (1-lambda)*xj); labels blend exactly,
/// y~ = lambda*yi + (1-lambda)*yj. Shapes and label lengths must match.
std::pair<ImageBuffer, SoftLabel> mixup_blend(const ImageBuffer& xi,
                                              const SoftLabel& yi,
                                              const ImageBuffer& xj,
                                              const SoftLabel& yj,
                                              double lambda);

}  // namespace trapforge
