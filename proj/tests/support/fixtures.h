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

#ifndef SKYBLIGHT_TESTS_SUPPORT_FIXTURES_H_
#define SKYBLIGHT_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "skyblight/core/image.h"
#include "skyblight/core/manifest.h"

namespace skyblight::testing {

// Synthetic air-to-air frames: sky gradient with soft clouds, an optional
// ground band, and one to three small dark aircraft whose tight boxes are
// the ground truth. Generated with std::mt19937_64 so fixtures never share a
// random stream with the code under test.
struct FixtureSet {
  DatasetManifest manifest;
  std::vector<Rgb8Image> images;  // parallel to manifest.images
};

FixtureSet MakeFixtureSet(int count, std::uint32_t width, std::uint32_t height,
                          std::uint64_t seed);

// Writes images as PNG under `root` and returns the manifest path
// (`root`/manifest.json).
std::filesystem::path WriteFixtureSet(const FixtureSet& set,
                                      const std::filesystem::path& root);

Rgb8Image UniformImage(std::uint32_t width, std::uint32_t height,
                       std::uint8_t value);
Rgb8Image Checkerboard(std::uint32_t width, std::uint32_t height, int cell,
                       std::uint8_t dark, std::uint8_t light);
Rgb8Image RandomImage(std::uint32_t width, std::uint32_t height,
                      std::uint64_t seed);

double Psnr(const Rgb8Image& a, const Rgb8Image& b);
int MaxChannelDelta(const Rgb8Image& a, const Rgb8Image& b);

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Order-independent digest of every regular file under `root` (relative
// path + content), skipping file names in `exclude`.
std::string ReadBytes(const std::filesystem::path& path);
void WriteBytes(const std::filesystem::path& path, const std::string& bytes);

std::string TreeHash(const std::filesystem::path& root,
                     const std::vector<std::string>& exclude = {});

}  // namespace skyblight::testing

#endif  // SKYBLIGHT_TESTS_SUPPORT_FIXTURES_H_
