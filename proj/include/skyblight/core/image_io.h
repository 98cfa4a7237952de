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

#ifndef SKYBLIGHT_CORE_IMAGE_IO_H_
#define SKYBLIGHT_CORE_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "skyblight/core/image.h"

namespace skyblight {

// Reads 8-bit PNG and baseline JPEG; the format is sniffed from the magic
// bytes. Missing or truncated files raise kIoFailure, anything else that is
// not PNG/JPEG raises kUnsupportedFormat.
Rgb8Image DecodeImage(std::span<const std::uint8_t> bytes);
Rgb8Image LoadImage(const std::filesystem::path& path);

// PNG is the only output format; encoding is deterministic for a given
// libpng/zlib build.
std::vector<std::uint8_t> EncodePng(const Rgb8Image& image);
void SaveImage(const Rgb8Image& image, const std::filesystem::path& path);

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_IMAGE_IO_H_
