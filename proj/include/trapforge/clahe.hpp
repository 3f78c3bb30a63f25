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

#include <cstdint>
#include <vector>

#include "trapforge/image.hpp"

namespace trapforge {

/// Per-tile intensity histogram. bins.size() is the bin count B; the sum of
/// bins equals the number of pixels counted.
struct Histogram {
  std::vector<std::uint64_t> bins;
};

/// Monotone value-mapping table derived from a clipped histogram's CDF.
/// map.size() == B, entries in [0, B-1], non-decreasing.
struct Lut {
  std::vector<int> map;
};

struct ClaheConfig {
  int grid_w = 8;
  int grid_h = 8;
  /// Clip limit is clip_factor times the mean bin height of a tile,
  /// i.e. max(1, round(clip_factor * tile_pixels / bins)).
  double clip_factor = 4.0;
  /// Bin count. Fixed at 256 for 8-bit buffers; the histogram/LUT math below
  /// accepts any B.
  int bins = 256;
};

/// Non-owning single-channel rectangular window into 8-bit data.
struct ChannelView {
  const std::uint8_t* data = nullptr;
  int stride = 0;  // elements between rows
  int width = 0;
  int height = 0;
};

/// View of one channel of an image (full extent). The view indexes in
/// channel-strided steps, so it is only cheap for channel 0 of 1-channel
/// images; use for tests and small planes.
std::vector<std::uint8_t> extract_channel(const ImageBuffer& img, int channel);

/// bins[v] = count of pixels in the region with value v. Region must be
/// non-empty; values must be < bins.
Histogram compute_histogram(const ChannelView& region, int bins = 256);

/// Single pass: every bin above clip_limit is cut to clip_limit; the total
/// excess E goes back as floor(E/B) per bin plus one extra to bins
/// 0..(E mod B)-1. Total count is preserved. Bins may end up above
/// clip_limit by the redistribution increment.
Histogram clip_and_redistribute(Histogram hist, std::uint64_t clip_limit);

/// CDF-derived mapping: map[v] = round((B-1)*(cdf[v]-cdf_min)/(N-cdf_min))
/// where cdf_min is the smallest nonzero CDF entry. Entries below the first
/// occupied bin clamp to 0 (such values never occur in the region). A
/// single-valued region (N == cdf_min) maps to the identity.
Lut histogram_to_lut(const Histogram& hist);

/// Contrast limited adaptive histogram equalization. The image is
/// reflection-padded on the right/bottom so each dimension divides the grid,
/// tiled grid_w x grid_h, one clipped-histogram LUT per tile, and every
/// output pixel is the bilinear blend of the four surrounding tile-center
/// LUTs evaluated at the pixel's value (edge pixels replicate the nearest
/// tiles). Single-valued tiles skip the clip so they keep the degenerate
/// identity LUT; constant images are therefore fixed points. Padding is
/// cropped off. 3-channel images are processed per channel independently.
ImageBuffer apply_clahe(const ImageBuffer& img, const ClaheConfig& cfg);

}  // namespace trapforge
