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

#include "skyblight/core/manifest.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "skyblight/core/error.h"

namespace skyblight {
namespace {

using nlohmann::json;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedManifest, what);
}

const json& Require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    Malformed(std::string(where) + " is missing key '" + key + "'");
  }
  return *it;
}

const json& RequireArray(const json& obj, const char* key) {
  const json& v = Require(obj, key, "manifest");
  if (!v.is_array()) Malformed(std::string("'") + key + "' must be a list");
  return v;
}

std::int64_t RequireInt(const json& obj, const char* key, const char* where) {
  const json& v = Require(obj, key, where);
  if (!v.is_number_integer()) {
    Malformed(std::string(where) + "." + key + " must be an integer");
  }
  return v.get<std::int64_t>();
}

double RequireNumber(const json& v, const std::string& where) {
  if (!v.is_number()) Malformed(where + " must be a number");
  return v.get<double>();
}

BoxXywh ParseBox(const json& v, const char* where) {
  if (!v.is_array() || v.size() != 4) {
    Malformed(std::string(where) + ".bbox must be [x, y, w, h]");
  }
  return BoxXywh{RequireNumber(v[0], "bbox[0]"), RequireNumber(v[1], "bbox[1]"),
                 RequireNumber(v[2], "bbox[2]"),
                 RequireNumber(v[3], "bbox[3]")};
}

bool IsSafeRelativePath(const std::string& name) {
  if (name.empty()) return false;
  const std::filesystem::path path(name);
  if (path.is_absolute() || path.has_root_name() || path.has_root_directory()) {
    return false;
  }
  for (const auto& part : path) {
    if (part == "..") return false;
  }
  return true;
}

}  // namespace

const ImageEntry* DatasetManifest::FindImage(std::int64_t image_id) const {
  for (const auto& image : images) {
    if (image.id == image_id) return &image;
  }
  return nullptr;
}

const Category* DatasetManifest::FindCategory(std::int64_t category_id) const {
  for (const auto& category : categories) {
    if (category.id == category_id) return &category;
  }
  return nullptr;
}

void ValidateManifest(const DatasetManifest& manifest) {
  std::unordered_set<std::int64_t> image_ids;
  for (const auto& image : manifest.images) {
    if (!image_ids.insert(image.id).second) {
      Malformed("duplicate image id " + std::to_string(image.id));
    }
    if (image.width == 0 || image.height == 0) {
      Malformed("image " + std::to_string(image.id) + " has zero extent");
    }
    if (!IsSafeRelativePath(image.file_name)) {
      Malformed("image " + std::to_string(image.id) + " file_name '" +
                image.file_name + "' is not a safe relative path");
    }
  }
  std::unordered_set<std::int64_t> category_ids;
  for (const auto& category : manifest.categories) {
    if (!category_ids.insert(category.id).second) {
      Malformed("duplicate category id " + std::to_string(category.id));
    }
  }
  std::unordered_set<std::int64_t> annotation_ids;
  for (const auto& ann : manifest.annotations) {
    const std::string tag = "annotation " + std::to_string(ann.id);
    if (!annotation_ids.insert(ann.id).second) {
      Malformed("duplicate " + tag);
    }
    const ImageEntry* image = manifest.FindImage(ann.image_id);
    if (image == nullptr) {
      throw Error(ErrorCode::kDanglingReference,
                  tag + " references missing image " +
                      std::to_string(ann.image_id));
    }
    if (!category_ids.contains(ann.category_id)) {
      throw Error(ErrorCode::kDanglingReference,
                  tag + " references missing category " +
                      std::to_string(ann.category_id));
    }
    const BoxXywh& b = ann.bbox;
    if (!(b.w > 0.0) || !(b.h > 0.0)) {
      Malformed(tag + " has non-positive width or height");
    }
    if (!(b.x < image->width) || !(b.x + b.w > 0.0) || !(b.y < image->height) ||
        !(b.y + b.h > 0.0)) {
      Malformed(tag + " does not intersect its image");
    }
  }
}

DatasetManifest ParseManifestText(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) Malformed("top level must be an object");

  DatasetManifest manifest;
  try {
    for (const json& item : RequireArray(root, "images")) {
      ImageEntry image;
      image.id = RequireInt(item, "id", "image");
      const json& name = Require(item, "file_name", "image");
      if (!name.is_string()) Malformed("image.file_name must be a string");
      image.file_name = name.get<std::string>();
      const std::int64_t w = RequireInt(item, "width", "image");
      const std::int64_t h = RequireInt(item, "height", "image");
      if (w < 1 || h < 1 || w > UINT32_MAX || h > UINT32_MAX) {
        Malformed("image " + std::to_string(image.id) + " has bad extent");
      }
      image.width = static_cast<std::uint32_t>(w);
      image.height = static_cast<std::uint32_t>(h);
      manifest.images.push_back(std::move(image));
    }
    for (const json& item : RequireArray(root, "annotations")) {
      GtBox box;
      box.id = RequireInt(item, "id", "annotation");
      box.image_id = RequireInt(item, "image_id", "annotation");
      box.category_id = RequireInt(item, "category_id", "annotation");
      box.bbox = ParseBox(Require(item, "bbox", "annotation"), "annotation");
      manifest.annotations.push_back(box);
    }
    for (const json& item : RequireArray(root, "categories")) {
      Category category;
      category.id = RequireInt(item, "id", "category");
      const json& name = Require(item, "name", "category");
      if (!name.is_string()) Malformed("category.name must be a string");
      category.name = name.get<std::string>();
      manifest.categories.push_back(std::move(category));
    }
  } catch (const json::exception& e) {
    Malformed(std::string("schema error: ") + e.what());
  }
  ValidateManifest(manifest);
  return manifest;
}

DatasetManifest ParseManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open manifest " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseManifestText(text.str());
}

std::string SerializeManifest(const DatasetManifest& manifest) {
  json images = json::array();
  for (const auto& image : manifest.images) {
    images.push_back({{"id", image.id},
                      {"file_name", image.file_name},
                      {"width", image.width},
                      {"height", image.height}});
  }
  json annotations = json::array();
  for (const auto& ann : manifest.annotations) {
    annotations.push_back(
        {{"id", ann.id},
         {"image_id", ann.image_id},
         {"category_id", ann.category_id},
         {"bbox", {ann.bbox.x, ann.bbox.y, ann.bbox.w, ann.bbox.h}}});
  }
  json categories = json::array();
  for (const auto& category : manifest.categories) {
    categories.push_back({{"id", category.id}, {"name", category.name}});
  }
  json root = {{"images", std::move(images)},
               {"annotations", std::move(annotations)},
               {"categories", std::move(categories)}};
  return root.dump(1);
}

void WriteManifest(const DatasetManifest& manifest,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << SerializeManifest(manifest) << '\n';
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  }
}

}  // namespace skyblight
