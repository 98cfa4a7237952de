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

#include "skyblight/core/image_io.h"

#include <png.h>
#include <stdio.h>

#include <algorithm>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include <jpeglib.h>

#include "skyblight/core/error.h"

namespace skyblight {
namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a,
                                       '\n'};

bool IsPng(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 8 && std::equal(kPngMagic, kPngMagic + 8,
                                         bytes.begin());
}

bool IsJpeg(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 &&
         bytes[2] == 0xff;
}

Rgb8Image DecodePng(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kIoFailure, "PNG header: " + msg);
  }
  if (image.width == 0 || image.height == 0) {
    png_image_free(&image);
    throw Error(ErrorCode::kIoFailure, "PNG has zero extent");
  }
  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kIoFailure, "PNG data: " + msg);
  }
  return Rgb8Image(image.width, image.height, std::move(pixels));
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
  bool warned;
};

void JpegErrorExit(j_common_ptr info) {
  auto* mgr = reinterpret_cast<JpegErrorManager*>(info->err);
  (*info->err->format_message)(info, mgr->message);
  std::longjmp(mgr->jump, 1);
}

void JpegEmitMessage(j_common_ptr info, int level) {
  // Level -1 is a corrupt-data warning (e.g. premature end of file); the
  // decoder would otherwise pad the image with grey.
  if (level < 0) {
    auto* mgr = reinterpret_cast<JpegErrorManager*>(info->err);
    if (!mgr->warned) (*info->err->format_message)(info, mgr->message);
    mgr->warned = true;
  }
}

enum class JpegStatus { kOk, kCorrupt, kNotRgb };

// Keeps setjmp in a frame that owns no objects with destructors; all output
// goes through pointers into the caller's frame.
JpegStatus DecodeJpegInto(std::span<const std::uint8_t> bytes,
                          std::vector<std::uint8_t>* pixels,
                          std::uint32_t* width, std::uint32_t* height,
                          char* message) {
  jpeg_decompress_struct info;
  JpegErrorManager err;
  err.warned = false;
  err.message[0] = '\0';
  info.err = jpeg_std_error(&err.base);
  err.base.error_exit = JpegErrorExit;
  err.base.emit_message = JpegEmitMessage;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&info);
    std::memcpy(message, err.message, JMSG_LENGTH_MAX);
    return JpegStatus::kCorrupt;
  }
  jpeg_create_decompress(&info);
  jpeg_mem_src(&info, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&info, TRUE);
  info.out_color_space = JCS_RGB;
  jpeg_start_decompress(&info);
  if (info.output_components != 3 || info.output_width == 0 ||
      info.output_height == 0) {
    jpeg_destroy_decompress(&info);
    return JpegStatus::kNotRgb;
  }
  *width = info.output_width;
  *height = info.output_height;
  pixels->resize(static_cast<std::size_t>(*width) * *height * 3);
  while (info.output_scanline < info.output_height) {
    JSAMPROW row = pixels->data() +
                   static_cast<std::size_t>(info.output_scanline) * *width * 3;
    jpeg_read_scanlines(&info, &row, 1);
  }
  jpeg_finish_decompress(&info);
  jpeg_destroy_decompress(&info);
  if (err.warned) {
    std::memcpy(message, err.message, JMSG_LENGTH_MAX);
    return JpegStatus::kCorrupt;
  }
  return JpegStatus::kOk;
}

Rgb8Image DecodeJpeg(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> pixels;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  char message[JMSG_LENGTH_MAX] = {};
  switch (DecodeJpegInto(bytes, &pixels, &width, &height, message)) {
    case JpegStatus::kOk:
      return Rgb8Image(width, height, std::move(pixels));
    case JpegStatus::kNotRgb:
      throw Error(ErrorCode::kUnsupportedFormat, "JPEG is not 3-channel RGB");
    case JpegStatus::kCorrupt:
      break;
  }
  throw Error(ErrorCode::kIoFailure, std::string("JPEG: ") + message);
}

}  // namespace

Rgb8Image DecodeImage(std::span<const std::uint8_t> bytes) {
  if (IsPng(bytes)) return DecodePng(bytes);
  if (IsJpeg(bytes)) return DecodeJpeg(bytes);
  if (bytes.size() < 8) {
    throw Error(ErrorCode::kIoFailure, "file too short to hold an image");
  }
  throw Error(ErrorCode::kUnsupportedFormat,
              "only PNG and baseline JPEG are readable");
}

Rgb8Image LoadImage(const std::filesystem::path& path) {
  const auto bytes = ReadFileBytes(path);
  try {
    return DecodeImage(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> EncodePng(const Rgb8Image& image) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = image.width();
  png.height = image.height();
  png.format = PNG_FORMAT_RGB;
  png.flags = PNG_IMAGE_FLAG_FAST;
  png_alloc_size_t size = PNG_IMAGE_PNG_SIZE_MAX(png);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0,
                                 image.pixels().data(), 0, nullptr)) {
    throw Error(ErrorCode::kIoFailure,
                std::string("PNG encode: ") + png.message);
  }
  out.resize(size);
  return out;
}

void SaveImage(const Rgb8Image& image, const std::filesystem::path& path) {
  WriteFileBytes(path, EncodePng(image));
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed for " + path.string());
  }
  return bytes;
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot create " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed for " +
                                                   path.string());
}

}  // namespace skyblight
