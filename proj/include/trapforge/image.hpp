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

#include <cmath>
#include <cstdint>
#include <vector>

#include "trapforge/error.hpp"

namespace trapforge {

/// 8-bit raster, row-major with interleaved channels. channels is 1 (gray)
/// or 3 (RGB). pixels.size() == width * height * channels.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  static ImageBuffer create(int width, int height, int channels,
                            std::uint8_t fill = 0);

  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  std::uint8_t at(int x, int y, int c) const { return pixels[index(x, y, c)]; }
  std::uint8_t& at(int x, int y, int c) { return pixels[index(x, y, c)]; }

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  bool same_shape(const ImageBuffer& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }
};

/// Throws if dimensions are non-positive, channels is not 1 or 3, or the
/// pixel vector does not match width * height * channels.
void validate(const ImageBuffer& img);

/// Seed for every randomized operation. Identical seed and identical inputs
/// give bit-identical outputs.
struct Seed {
  std::uint64_t value = 0;
};

/// Round half away from zero, then clamp into [0,255].
inline std::uint8_t round_to_u8(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

}  // namespace trapforge
