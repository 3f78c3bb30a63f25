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

#include "trapforge/clahe.hpp"

#include <algorithm>
#include <cmath>

#include "trapforge/image_ops.hpp"

namespace trapforge {

std::vector<std::uint8_t> extract_channel(const ImageBuffer& img,
                                          int channel) {
  validate(img);
  require(channel >= 0 && channel < img.channels, "channel ", channel,
          " out of range for ", img.channels, "-channel image");
  std::vector<std::uint8_t> plane(img.pixel_count());
  for (std::size_t i = 0; i < plane.size(); ++i) {
    plane[i] = img.pixels[i * img.channels + channel];
  }
  return plane;
}

Histogram compute_histogram(const ChannelView& region, int bins) {
  require(region.data != nullptr && region.width >= 1 && region.height >= 1,
          "histogram region must be non-empty");
  require(bins >= 1, "bin count must be positive");
  Histogram hist;
  hist.bins.assign(bins, 0);
  for (int y = 0; y < region.height; ++y) {
    const std::uint8_t* row = region.data +
                              static_cast<std::size_t>(y) * region.stride;
    for (int x = 0; x < region.width; ++x) {
      require(row[x] < bins, "value ", static_cast<int>(row[x]),
              " exceeds bin count ", bins);
      ++hist.bins[row[x]];
    }
  }
  return hist;
}

Histogram clip_and_redistribute(Histogram hist, std::uint64_t clip_limit) {
  require(clip_limit >= 1, "clip limit must be >= 1");
  const std::size_t b = hist.bins.size();
  std::uint64_t excess = 0;
  for (std::uint64_t& count : hist.bins) {
    if (count > clip_limit) {
      excess += count - clip_limit;
      count = clip_limit;
    }
  }
  // Give every bin floor(E/B); the remainder goes one each to the lowest
  // bins. Bins may end up above the limit again; accepted overshoot.
  const std::uint64_t share = excess / b;
  const std::uint64_t remainder = excess % b;
  for (std::size_t v = 0; v < b; ++v) {
    hist.bins[v] += share + (v < remainder ? 1 : 0);
  }
  return hist;
}

Lut histogram_to_lut(const Histogram& hist) {
  const std::size_t b = hist.bins.size();
  std::uint64_t total = 0;
  std::uint64_t cdf_min = 0;
  for (const std::uint64_t count : hist.bins) {
    total += count;
    if (cdf_min == 0 && total > 0) cdf_min = total;
  }
  require(total > 0, "histogram is empty");

  Lut lut;
  lut.map.resize(b);
  if (total == cdf_min) {
    // Single occupied bin: equalization is undefined, keep values as-is.
    for (std::size_t v = 0; v < b; ++v) lut.map[v] = static_cast<int>(v);
    return lut;
  }
  const double denom = static_cast<double>(total - cdf_min);
  std::uint64_t cdf = 0;
  for (std::size_t v = 0; v < b; ++v) {
    cdf += hist.bins[v];
    // Below the first occupied bin cdf < cdf_min; clamp to 0 (no pixel in
    // the region carries such a value).
    const double num = cdf >= cdf_min
                           ? static_cast<double>(cdf - cdf_min)
                           : 0.0;
    // (B-1)*num is an exact integer in double, so the division is the only
    // rounding step.
    lut.map[v] =
        static_cast<int>(std::lround(static_cast<double>(b - 1) * num / denom));
  }
  return lut;
}

namespace {

std::uint64_t tile_clip_limit(const ClaheConfig& cfg, std::uint64_t tile_pixels) {
  const double raw = cfg.clip_factor * static_cast<double>(tile_pixels) /
                     static_cast<double>(cfg.bins);
  const long long rounded = std::llround(raw);
  return rounded < 1 ? 1 : static_cast<std::uint64_t>(rounded);
}

}  // namespace

ImageBuffer apply_clahe(const ImageBuffer& img, const ClaheConfig& cfg) {
  validate(img);
  require(cfg.grid_w >= 1 && cfg.grid_h >= 1, "grid dimensions must be >= 1");
  require(cfg.clip_factor >= 1.0 && std::isfinite(cfg.clip_factor),
          "clip factor must be finite and >= 1, got ", cfg.clip_factor);
  require(cfg.bins == 256, "8-bit path requires 256 bins, got ", cfg.bins);

  const int w = img.width;
  const int h = img.height;
  // Reflect-pad right/bottom so the grid divides both dimensions.
  const int tile_w = (w + cfg.grid_w - 1) / cfg.grid_w;
  const int tile_h = (h + cfg.grid_h - 1) / cfg.grid_h;
  const int pw = tile_w * cfg.grid_w;
  const int ph = tile_h * cfg.grid_h;
  const std::uint64_t clip = tile_clip_limit(
      cfg, static_cast<std::uint64_t>(tile_w) * tile_h);

  ImageBuffer out = ImageBuffer::create(w, h, img.channels);
  std::vector<std::uint8_t> plane(static_cast<std::size_t>(pw) * ph);
  std::vector<Lut> luts(static_cast<std::size_t>(cfg.grid_w) * cfg.grid_h);

  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < ph; ++y) {
      const int sy = mirror_index(y, h);
      for (int x = 0; x < pw; ++x) {
        plane[static_cast<std::size_t>(y) * pw + x] =
            img.at(mirror_index(x, w), sy, c);
      }
    }
    const std::uint64_t tile_px = static_cast<std::uint64_t>(tile_w) * tile_h;
    for (int ty = 0; ty < cfg.grid_h; ++ty) {
      for (int tx = 0; tx < cfg.grid_w; ++tx) {
        ChannelView tile;
        tile.data = plane.data() +
                    static_cast<std::size_t>(ty) * tile_h * pw +
                    static_cast<std::size_t>(tx) * tile_w;
        tile.stride = pw;
        tile.width = tile_w;
        tile.height = tile_h;
        Histogram hist = compute_histogram(tile, cfg.bins);
        // Clipping a single-valued tile would smear its spike across empty
        // bins and lose the degenerate identity mapping, so such tiles skip
        // the clip and equalize to themselves.
        const bool single_valued =
            std::any_of(hist.bins.begin(), hist.bins.end(),
                        [&](std::uint64_t b) { return b == tile_px; });
        if (!single_valued) {
          hist = clip_and_redistribute(std::move(hist), clip);
        }
        luts[static_cast<std::size_t>(ty) * cfg.grid_w + tx] =
            histogram_to_lut(hist);
      }
    }
    for (int y = 0; y < h; ++y) {
      // Grid coordinates of the pixel relative to tile centers.
      const double gy = (y + 0.5) / tile_h - 0.5;
      const int ty0 = static_cast<int>(std::floor(gy));
      const double fy = gy - ty0;
      const int y0 = std::clamp(ty0, 0, cfg.grid_h - 1);
      const int y1 = std::clamp(ty0 + 1, 0, cfg.grid_h - 1);
      for (int x = 0; x < w; ++x) {
        const double gx = (x + 0.5) / tile_w - 0.5;
        const int tx0 = static_cast<int>(std::floor(gx));
        const double fx = gx - tx0;
        const int x0 = std::clamp(tx0, 0, cfg.grid_w - 1);
        const int x1 = std::clamp(tx0 + 1, 0, cfg.grid_w - 1);
        const int v = img.at(x, y, c);
        const double top =
            (1.0 - fx) * luts[static_cast<std::size_t>(y0) * cfg.grid_w + x0].map[v] +
            fx * luts[static_cast<std::size_t>(y0) * cfg.grid_w + x1].map[v];
        const double bottom =
            (1.0 - fx) * luts[static_cast<std::size_t>(y1) * cfg.grid_w + x0].map[v] +
            fx * luts[static_cast<std::size_t>(y1) * cfg.grid_w + x1].map[v];
        out.at(x, y, c) = round_to_u8((1.0 - fy) * top + fy * bottom);
      }
    }
  }
  return out;
}

}  // namespace trapforge
