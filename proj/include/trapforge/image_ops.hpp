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

#include "trapforge/image.hpp"

namespace trapforge {

/// BT.601 luminance, round half away from zero. The result always carries 3
/// identical channels so pipelines mixing grayscale and color keep one shape;
/// 1-channel input is replicated unchanged.
ImageBuffer to_grayscale(const ImageBuffer& img);

/// Mirror columns: x -> width-1-x. Involution.
ImageBuffer horizontal_flip(const ImageBuffer& img);

/// Contiguous out_w x out_h window with the top-left corner drawn uniformly
/// from all valid positions (x drawn before y).
ImageBuffer random_crop(const ImageBuffer& img, int out_w, int out_h,
                        Seed seed);

/// Rotation about the image center ((w-1)/2, (h-1)/2), nearest-neighbor
/// resampling, same output dimensions. Pixels whose source falls outside the
/// image are set to fill. Exact multiples of 90 degrees use snapped
/// sin/cos so they are lossless permutations on square images.
ImageBuffer rotate(const ImageBuffer& img, double degrees,
                   std::uint8_t fill = 0);

/// v -> clamp(round(v * factor)). factor must be finite and >= 0.
ImageBuffer adjust_brightness(const ImageBuffer& img, double factor);

/// Separable Gaussian, kernel radius ceil(3*sigma), weights proportional to
/// exp(-k^2 / (2 sigma^2)) normalized to sum 1, reflected borders. The two
/// passes run in double precision and round to 8 bits once at the end.
/// sigma = 0 is the identity.
ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma);

/// v -> clamp(round(v + n)), n ~ N(0, sigma^2) from the seeded stream, one
/// draw per value consumed in row-major interleaved order. sigma = 0 copies.
ImageBuffer add_gaussian_noise(const ImageBuffer& img, double sigma,
                               Seed seed);

/// Symmetric reflection of i into [0,n): ... 2 1 0 | 0 1 2 ... n-1 | n-1 ...
/// Valid for any i (the extension has period 2n).
int mirror_index(int i, int n);

}  // namespace trapforge
