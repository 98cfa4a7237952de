// Copyright 2026 The Skyblight Authors. All Rights Reserved.
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

#ifndef SKYBLIGHT_CORE_MANIFEST_H_
#define SKYBLIGHT_CORE_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skyblight/core/types.h"

namespace skyblight {

struct ImageEntry {
  std::int64_t id = 0;
  std::string file_name;
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  friend bool operator==(const ImageEntry&, const ImageEntry&) = default;
};

struct Category {
  std::int64_t id = 0;
  std::string name;

  friend bool operator==(const Category&, const Category&) = default;
};

// COCO-detection subset: images, annotations, categories. Instances built
// through ParseManifest / Validate satisfy the referential invariants.
struct DatasetManifest {
  std::vector<ImageEntry> images;
  std::vector<GtBox> annotations;
  std::vector<Category> categories;

  const ImageEntry* FindImage(std::int64_t image_id) const;
  const Category* FindCategory(std::int64_t category_id) const;

  friend bool operator==(const DatasetManifest&,
                         const DatasetManifest&) = default;
};

// Throws kMalformedManifest on schema or geometry violations and
// kDanglingReference when an annotation points at a missing image/category.
void ValidateManifest(const DatasetManifest& manifest);

DatasetManifest ParseManifestText(std::string_view json_text);
DatasetManifest ParseManifest(const std::filesystem::path& path);

// Emits exactly the schema keys, nothing else.
std::string SerializeManifest(const DatasetManifest& manifest);
void WriteManifest(const DatasetManifest& manifest,
                   const std::filesystem::path& path);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_MANIFEST_H_
