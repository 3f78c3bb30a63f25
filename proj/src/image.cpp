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

#include "trapforge/image.hpp"

namespace trapforge {

ImageBuffer ImageBuffer::create(int width, int height, int channels,
                                std::uint8_t fill) {
  ImageBuffer img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  require(width >= 1 && height >= 1, "image dimensions must be positive, got ",
          width, "x", height);
  require(channels == 1 || channels == 3, "channels must be 1 or 3, got ",
          channels);
  img.pixels.assign(
      static_cast<std::size_t>(width) * height * channels, fill);
  return img;
}

void validate(const ImageBuffer& img) {
  require(img.width >= 1 && img.height >= 1,
          "image dimensions must be positive, got ", img.width, "x",
          img.height);
  require(img.channels == 1 || img.channels == 3, "channels must be 1 or 3, got ",
          img.channels);
  const std::size_t expected =
      static_cast<std::size_t>(img.width) * img.height * img.channels;
  require(img.pixels.size() == expected, "pixel buffer size ",
          img.pixels.size(), " does not match ", img.width, "x", img.height,
          "x", img.channels);
}

}  // namespace trapforge
