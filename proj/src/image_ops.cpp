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

#include "trapforge/image_ops.hpp"

#include <cmath>
#include <vector>

#include "trapforge/rng.hpp"

namespace trapforge {

ImageBuffer to_grayscale(const ImageBuffer& img) {
  validate(img);
  ImageBuffer out = ImageBuffer::create(img.width, img.height, 3);
  const std::size_t n = img.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t g;
    if (img.channels == 1) {
      g = img.pixels[i];
    } else {
      const std::uint8_t* p = &img.pixels[i * 3];
      g = round_to_u8(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
    }
    out.pixels[i * 3 + 0] = g;
    out.pixels[i * 3 + 1] = g;
    out.pixels[i * 3 + 2] = g;
  }
  return out;
}

ImageBuffer horizontal_flip(const ImageBuffer& img) {
  validate(img);
  ImageBuffer out = img;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(img.width - 1 - x, y, c);
      }
    }
  }
  return out;
}

ImageBuffer random_crop(const ImageBuffer& img, int out_w, int out_h,
                        Seed seed) {
  validate(img);
  require(out_w >= 1 && out_h >= 1 && out_w <= img.width &&
              out_h <= img.height,
          "crop ", out_w, "x", out_h, " does not fit in ", img.width, "x",
          img.height);
  SampleRng rng(seed.value);
  const int x0 = static_cast<int>(rng.uniform_int(img.width - out_w + 1));
  const int y0 = static_cast<int>(rng.uniform_int(img.height - out_h + 1));
  ImageBuffer out = ImageBuffer::create(out_w, out_h, img.channels);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(x0 + x, y0 + y, c);
      }
    }
  }
  return out;
}

ImageBuffer rotate(const ImageBuffer& img, double degrees, std::uint8_t fill) {
  validate(img);
  require(std::isfinite(degrees), "rotation angle must be finite");
  double c;
  double s;
  if (std::fmod(degrees, 90.0) == 0.0) {
    // Snap quarter turns so they are exact permutations.
    int q = static_cast<int>(std::fmod(degrees, 360.0)) / 90;
    if (q < 0) q += 4;
    static const double kCos[4] = {1.0, 0.0, -1.0, 0.0};
    static const double kSin[4] = {0.0, 1.0, 0.0, -1.0};
    c = kCos[q];
    s = kSin[q];
  } else {
    const double rad = degrees * 3.14159265358979323846 / 180.0;
    c = std::cos(rad);
    s = std::sin(rad);
  }
  const double cx = (img.width - 1) / 2.0;
  const double cy = (img.height - 1) / 2.0;
  ImageBuffer out = ImageBuffer::create(img.width, img.height, img.channels);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      // Inverse mapping: rotate the output coordinate back into the source.
      const double dx = x - cx;
      const double dy = y - cy;
      const long sx = std::lround(c * dx + s * dy + cx);
      const long sy = std::lround(-s * dx + c * dy + cy);
      for (int ch = 0; ch < img.channels; ++ch) {
        out.at(x, y, ch) =
            (sx >= 0 && sx < img.width && sy >= 0 && sy < img.height)
                ? img.at(static_cast<int>(sx), static_cast<int>(sy), ch)
                : fill;
      }
    }
  }
  return out;
}

ImageBuffer adjust_brightness(const ImageBuffer& img, double factor) {
  validate(img);
  require(std::isfinite(factor) && factor >= 0.0,
          "brightness factor must be finite and non-negative, got ", factor);
  ImageBuffer out = img;
  for (std::uint8_t& v : out.pixels) {
    v = round_to_u8(v * factor);
  }
  return out;
}

int mirror_index(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma) {
  validate(img);
  require(std::isfinite(sigma) && sigma >= 0.0,
          "blur sigma must be finite and non-negative, got ", sigma);
  if (sigma == 0.0) return img;

  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> weights(2 * radius + 1);
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = std::exp(-(static_cast<double>(k) * k) /
                              (2.0 * sigma * sigma));
    weights[k + radius] = w;
    total += w;
  }
  for (double& w : weights) w /= total;

  const int w = img.width;
  const int h = img.height;
  const int ch = img.channels;
  // Horizontal pass into doubles, vertical pass back; round once at the end.
  std::vector<double> mid(img.pixels.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += weights[k + radius] * img.at(mirror_index(x + k, w), y, c);
        }
        mid[img.index(x, y, c)] = acc;
      }
    }
  }
  ImageBuffer out = ImageBuffer::create(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += weights[k + radius] * mid[img.index(x, mirror_index(y + k, h), c)];
        }
        out.at(x, y, c) = round_to_u8(acc);
      }
    }
  }
  return out;
}

ImageBuffer add_gaussian_noise(const ImageBuffer& img, double sigma,
                               Seed seed) {
  validate(img);
  require(std::isfinite(sigma) && sigma >= 0.0,
          "noise sigma must be finite and non-negative, got ", sigma);
  if (sigma == 0.0) return img;
  SampleRng rng(seed.value);
  ImageBuffer out = img;
  // One draw per value, row-major interleaved.
  for (std::uint8_t& v : out.pixels) {
    v = round_to_u8(v + sigma * rng.normal());
  }
  return out;
}

}  // namespace trapforge
