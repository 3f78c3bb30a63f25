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

#include <filesystem>

#include "trapforge/image.hpp"

namespace trapforge {

/// Decodes a PNG or JPEG file (detected by signature) into an 8-bit gray or
/// RGB buffer. Alpha is stripped, palettes expand to RGB, 16-bit PNGs reduce
/// to 8.
ImageBuffer load_image(const std::filesystem::path& path);

/// Lossless PNG output (8-bit gray or RGB). Encoding settings are fixed so
/// equal buffers give byte-identical files.
void save_png(const ImageBuffer& img, const std::filesystem::path& path);

}  // namespace trapforge
