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

#include "trapforge/class_presets.hpp"

#include <fstream>

#include "trapforge/csv.hpp"
#include "trapforge/error.hpp"

namespace trapforge {

ClassSet train14_classes() {
  // The categories present in the iWildCam 2019 training region, in
  // ascending category-id order.
  return ClassSet::create({
      "empty", "deer", "squirrel", "rodent", "rabbit", "fox", "coyote",
      "raccoon", "skunk", "bobcat", "cat", "dog", "opossum", "mountain_lion",
  });
}

ClassSet full23_classes() {
  // The full iWildCam 2019 category list, in category-id order.
  return ClassSet::create({
      "empty", "deer", "moose", "squirrel", "rodent", "small_mammal", "elk",
      "pronghorn_antelope", "rabbit", "bighorn_sheep", "fox", "coyote",
      "black_bear", "raccoon", "skunk", "wolf", "bobcat", "cat", "dog",
      "opossum", "bison", "mountain_goat", "mountain_lion",
  });
}

ClassSet load_class_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open class file ", path.string());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    const std::string name = trim(line);
    if (name.empty() || name[0] == '#') continue;
    names.push_back(name);
  }
  require(!names.empty(), "class file ", path.string(), " lists no classes");
  return ClassSet::create(std::move(names));
}

ClassSet resolve_class_set(const std::string& spec) {
  if (spec == "train14") return train14_classes();
  if (spec == "full23") return full23_classes();
  return load_class_file(spec);
}

}  // namespace trapforge
