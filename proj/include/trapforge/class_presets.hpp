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
#include <string>

#include "trapforge/regularizers.hpp"

namespace trapforge {

/// The 14 species labels (plus empty) present in the iWildCam 2019 training
/// region.
ClassSet train14_classes();

/// The full 23-class iWildCam 2019 label set.
ClassSet full23_classes();

/// One class name per line; blank lines and lines starting with # skipped.
ClassSet load_class_file(const std::filesystem::path& path);

/// "train14", "full23", or a path to a class file.
ClassSet resolve_class_set(const std::string& spec);

}  // namespace trapforge
