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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "trapforge/error.hpp"
#include "trapforge/image_ops.hpp"
#include "test_util.hpp"

using namespace trapforge;
using testutil::random_image;

namespace {

ImageBuffer solid_rgb(int w, int h, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b) {
  ImageBuffer img = ImageBuffer::create(w, h, 3);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    img.pixels[i * 3 + 0] = r;
    img.pixels[i * 3 + 1] = g;
    img.pixels[i * 3 + 2] = b;
  }
  return img;
}

}  // namespace

TEST_CASE("grayscale hits the hand-computed luminance values") {
  // 0.299*255 = 76.245 -> 76; 0.587*255 = 149.685 -> 150.
  const ImageBuffer red = to_grayscale(solid_rgb(2, 2, 255, 0, 0));
  const ImageBuffer green = to_grayscale(solid_rgb(2, 2, 0, 255, 0));
  const ImageBuffer blue = to_grayscale(solid_rgb(2, 2, 0, 0, 255));
  const ImageBuffer white = to_grayscale(solid_rgb(2, 2, 255, 255, 255));
  CHECK(red.at(0, 0, 0) == 76);
  CHECK(green.at(0, 0, 0) == 150);
  CHECK(blue.at(0, 0, 0) == 29);
  CHECK(white.at(0, 0, 0) == 255);
  CHECK(red.channels == 3);
  CHECK(red.at(1, 1, 1) == 76);
  CHECK(red.at(1, 1, 2) == 76);
}

TEST_CASE("grayscale replicates 1-channel input unchanged") {
  ImageBuffer gray = ImageBuffer::create(3, 2, 1);
  for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
    gray.pixels[i] = static_cast<std::uint8_t>(i * 40);
  }
  const ImageBuffer out = to_grayscale(gray);
  CHECK(out.channels == 3);
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 3; ++x) {
      for (int c = 0; c < 3; ++c) {
        CHECK(out.at(x, y, c) == gray.at(x, y, 0));
      }
    }
  }
}

TEST_CASE("horizontal flip reverses columns and is an involution") {
  ImageBuffer img = ImageBuffer::create(2, 1, 1);
  img.pixels = {10, 20};
  const ImageBuffer flipped = horizontal_flip(img);
  CHECK(flipped.pixels == std::vector<std::uint8_t>{20, 10});

  const ImageBuffer rnd = random_image(13, 7, 3, 1);
  CHECK(horizontal_flip(horizontal_flip(rnd)).pixels == rnd.pixels);

  const ImageBuffer one = random_image(1, 5, 3, 2);
  CHECK(horizontal_flip(one).pixels == one.pixels);
}

TEST_CASE("random crop windows are contiguous and deterministic") {
  const ImageBuffer img = random_image(16, 12, 3, 3);
  const ImageBuffer full = random_crop(img, 16, 12, Seed{5});
  CHECK(full.pixels == img.pixels);

  const ImageBuffer a = random_crop(img, 5, 4, Seed{77});
  const ImageBuffer b = random_crop(img, 5, 4, Seed{77});
  CHECK(a.pixels == b.pixels);
  CHECK(a.width == 5);
  CHECK(a.height == 4);

  // The window must appear verbatim somewhere in the source.
  bool found = false;
  for (int y0 = 0; y0 <= 12 - 4 && !found; ++y0) {
    for (int x0 = 0; x0 <= 16 - 5 && !found; ++x0) {
      bool match = true;
      for (int y = 0; y < 4 && match; ++y) {
        for (int x = 0; x < 5 && match; ++x) {
          for (int c = 0; c < 3; ++c) {
            if (a.at(x, y, c) != img.at(x0 + x, y0 + y, c)) {
              match = false;
              break;
            }
          }
        }
      }
      found = match;
    }
  }
  CHECK(found);

  const ImageBuffer tiny = random_crop(solid_rgb(4, 4, 9, 9, 9), 1, 1, Seed{1});
  CHECK(tiny.pixels == std::vector<std::uint8_t>{9, 9, 9});

  CHECK_THROWS_AS(random_crop(img, 17, 4, Seed{0}), Error);
}

TEST_CASE("rotation fixes 0 degrees and reflects at 180") {
  const ImageBuffer img = random_image(7, 5, 3, 4);
  CHECK(rotate(img, 0.0).pixels == img.pixels);

  const ImageBuffer r180 = rotate(img, 180.0);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) {
      for (int c = 0; c < 3; ++c) {
        CHECK(r180.at(x, y, c) == img.at(6 - x, 4 - y, c));
      }
    }
  }
}

TEST_CASE("two quarter turns equal one half turn on squares") {
  for (const int n : {4, 5}) {
    const ImageBuffer img = random_image(n, n, 1, 11);
    const ImageBuffer twice = rotate(rotate(img, 90.0), 90.0);
    CHECK(twice.pixels == rotate(img, 180.0).pixels);
    // Quarter turns permute: the multiset of values is preserved.
    std::vector<std::uint8_t> a = rotate(img, 90.0).pixels;
    std::vector<std::uint8_t> b = img.pixels;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(rotate(rotate(img, 90.0), -90.0).pixels == img.pixels);
  }
  CHECK_THROWS_AS(rotate(random_image(3, 3, 1, 1), NAN), Error);
}

TEST_CASE("rotation fill covers uncovered corners") {
  const ImageBuffer img = solid_rgb(9, 9, 200, 200, 200);
  const ImageBuffer r45 = rotate(img, 45.0, 7);
  bool has_fill = false;
  for (const std::uint8_t v : r45.pixels) {
    CHECK((v == 200 || v == 7));
    if (v == 7) has_fill = true;
  }
  CHECK(has_fill);
}

TEST_CASE("brightness scales, clamps, and validates") {
  ImageBuffer img = ImageBuffer::create(1, 1, 3);
  img.pixels = {200, 100, 0};
  CHECK(adjust_brightness(img, 1.0).pixels == img.pixels);
  CHECK(adjust_brightness(img, 0.0).pixels ==
        std::vector<std::uint8_t>{0, 0, 0});
  const ImageBuffer doubled = adjust_brightness(img, 2.0);
  CHECK(doubled.pixels == std::vector<std::uint8_t>{255, 200, 0});
  // 102 * 1.25 = 127.5 exactly in binary; the half rounds away from zero.
  ImageBuffer half = ImageBuffer::create(1, 1, 1);
  half.pixels = {102};
  CHECK(adjust_brightness(half, 1.25).pixels[0] == 128);
  CHECK_THROWS_AS(adjust_brightness(img, -0.5), Error);
}

TEST_CASE("mirror_index reflects symmetrically") {
  CHECK(mirror_index(0, 5) == 0);
  CHECK(mirror_index(4, 5) == 4);
  CHECK(mirror_index(-1, 5) == 0);
  CHECK(mirror_index(-2, 5) == 1);
  CHECK(mirror_index(5, 5) == 4);
  CHECK(mirror_index(6, 5) == 3);
  CHECK(mirror_index(9, 5) == 0);
  CHECK(mirror_index(10, 5) == 0);
  CHECK(mirror_index(11, 5) == 1);
  CHECK(mirror_index(-7, 3) == 0);  // period 6: same as index -1
  CHECK(mirror_index(-4, 3) == 2);
  CHECK(mirror_index(123, 1) == 0);
}

TEST_CASE("blur keeps constants, identity at sigma 0, imprints the kernel") {
  const ImageBuffer flat = solid_rgb(10, 8, 77, 77, 77);
  CHECK(gaussian_blur(flat, 2.5).pixels == flat.pixels);

  const ImageBuffer rnd = random_image(9, 9, 3, 21);
  CHECK(gaussian_blur(rnd, 0.0).pixels == rnd.pixels);

  // Unit impulse: the center row of the output equals the normalized kernel
  // scaled by the impulse, computed here independently.
  const double sigma = 1.0;
  const int radius = 3;  // ceil(3 * 1.0)
  double weights[7];
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    weights[k + radius] = std::exp(-(k * k) / (2.0 * sigma * sigma));
    total += weights[k + radius];
  }
  for (double& w : weights) w /= total;

  ImageBuffer impulse = ImageBuffer::create(15, 15, 1);
  impulse.at(7, 7, 0) = 255;
  const ImageBuffer blurred = gaussian_blur(impulse, sigma);
  for (int k = -radius; k <= radius; ++k) {
    const double expected_x = 255.0 * weights[k + radius] * weights[radius];
    CHECK(blurred.at(7 + k, 7, 0) ==
          static_cast<std::uint8_t>(std::lround(expected_x)));
    CHECK(blurred.at(7, 7 + k, 0) == blurred.at(7 + k, 7, 0));
  }
  CHECK(blurred.at(7, 7, 0) ==
        static_cast<std::uint8_t>(std::lround(255.0 * weights[radius] *
                                              weights[radius])));
}

TEST_CASE("blur handles kernels wider than the image") {
  const ImageBuffer img = random_image(3, 2, 3, 8);
  const ImageBuffer out = gaussian_blur(img, 5.0);  // radius 15 > width
  CHECK(out.width == 3);
  CHECK(out.height == 2);
}

TEST_CASE("gaussian noise is seeded and centered") {
  const ImageBuffer img = solid_rgb(200, 167, 128, 128, 128);
  CHECK(add_gaussian_noise(img, 0.0, Seed{4}).pixels == img.pixels);

  const ImageBuffer a = add_gaussian_noise(img, 10.0, Seed{4});
  const ImageBuffer b = add_gaussian_noise(img, 10.0, Seed{4});
  CHECK(a.pixels == b.pixels);
  CHECK(a.pixels != add_gaussian_noise(img, 10.0, Seed{5}).pixels);

  // 100k+ values at sigma 10 around 128: the sample mean stays within 0.5.
  double sum = 0.0;
  for (const std::uint8_t v : a.pixels) sum += v;
  CHECK(std::abs(sum / static_cast<double>(a.pixels.size()) - 128.0) < 0.5);
}
