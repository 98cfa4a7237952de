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

#include "fixtures.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "skyblight/core/image_io.h"

namespace skyblight::testing {
namespace {

std::uint8_t ToByte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

// Smooth value noise: a coarse random lattice, bilinearly upsampled with a
// smoothstep weight. Values in [0, 1).
class ValueNoise {
 public:
  ValueNoise(int cells_x, int cells_y, std::mt19937_64& gen)
      : cx_(cells_x), cy_(cells_y), lattice_((cells_x + 1) * (cells_y + 1)) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : lattice_) v = u(gen);
  }

  double At(double fx, double fy) const {  // fx, fy in [0, 1]
    const double x = fx * cx_;
    const double y = fy * cy_;
    const int x0 = std::min(static_cast<int>(x), cx_ - 1);
    const int y0 = std::min(static_cast<int>(y), cy_ - 1);
    auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
    const double tx = smooth(x - x0);
    const double ty = smooth(y - y0);
    auto l = [&](int i, int j) { return lattice_[j * (cx_ + 1) + i]; };
    const double top = l(x0, y0) * (1 - tx) + l(x0 + 1, y0) * tx;
    const double bot = l(x0, y0 + 1) * (1 - tx) + l(x0 + 1, y0 + 1) * tx;
    return top * (1 - ty) + bot * ty;
  }

 private:
  int cx_;
  int cy_;
  std::vector<double> lattice_;
};

void PaintBackground(Rgb8Image& img, std::mt19937_64& gen, bool ground) {
  const double w = img.width();
  const double h = img.height();
  ValueNoise clouds(6, 4, gen);
  ValueNoise detail(17, 11, gen);
  ValueNoise terrain(23, 9, gen);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double horizon = ground ? h * (0.65 + 0.2 * u(gen)) : h * 2.0;
  const double cloud_cover = 0.45 + 0.2 * u(gen);
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      const double fy = y / h;
      const double fx = x / w;
      double r, g, b;
      if (y > horizon) {
        const double t = terrain.At(fx, fy);
        r = 70 + 60 * t;
        g = 90 + 50 * t;
        b = 50 + 30 * t;
      } else {
        // Sky: deeper blue at the top, paler toward the horizon.
        r = 95 + 70 * fy;
        g = 140 + 55 * fy;
        b = 200 + 35 * fy;
        const double c = clouds.At(fx, fy) * 0.75 + detail.At(fx, fy) * 0.25;
        const double cover = std::clamp((c - cloud_cover) * 3.0, 0.0, 1.0);
        const double shade = 215 + 25 * detail.At(fy, fx);
        r = r * (1 - cover) + shade * cover;
        g = g * (1 - cover) + shade * cover;
        b = b * (1 - cover) + (shade + 5) * cover;
      }
      img.at(x, y, 0) = ToByte(r);
      img.at(x, y, 1) = ToByte(g);
      img.at(x, y, 2) = ToByte(b);
    }
  }
}

// Fuselage, wings and tail. Returns the tight bounding box.
BoxXywh PaintAircraft(Rgb8Image& img, std::mt19937_64& gen, double cx,
                      double cy, double span) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double body_len = span * (0.8 + 0.2 * u(gen));
  const double body_half_h = std::max(2.0, span * 0.12);
  const double wing_half_w = std::max(1.5, span * 0.1);
  const double base = 35 + 45 * u(gen);
  double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
  auto inside = [&](double px, double py) {
    const double dx = (px - cx) / (body_len / 2);
    const double dy = (py - cy) / body_half_h;
    if (dx * dx + dy * dy <= 1.0) return true;  // fuselage
    if (std::fabs(px - cx) <= wing_half_w && std::fabs(py - cy) <= span / 2) {
      return true;  // wings
    }
    const double tail_x = cx - body_len / 2 + wing_half_w;
    return std::fabs(px - tail_x) <= wing_half_w * 0.8 &&
           std::fabs(py - cy) <= span * 0.22;  // tail plane
  };
  const int x_lo = std::max(0, static_cast<int>(cx - span));
  const int x_hi = std::min<int>(img.width() - 1, static_cast<int>(cx + span));
  const int y_lo = std::max(0, static_cast<int>(cy - span));
  const int y_hi = std::min<int>(img.height() - 1, static_cast<int>(cy + span));
  for (int y = y_lo; y <= y_hi; ++y) {
    for (int x = x_lo; x <= x_hi; ++x) {
      if (!inside(x + 0.5, y + 0.5)) continue;
      // Simple top-lit shading gives the object internal texture.
      const double shade = base + 30.0 * ((y - cy) / span) +
                           12.0 * std::sin(0.9 * x);
      img.at(x, y, 0) = ToByte(shade);
      img.at(x, y, 1) = ToByte(shade + 3);
      img.at(x, y, 2) = ToByte(shade + 8);
      min_x = std::min<double>(min_x, x);
      min_y = std::min<double>(min_y, y);
      max_x = std::max<double>(max_x, x + 1);
      max_y = std::max<double>(max_y, y + 1);
    }
  }
  return BoxXywh{min_x, min_y, max_x - min_x, max_y - min_y};
}

}  // namespace

FixtureSet MakeFixtureSet(int count, std::uint32_t width, std::uint32_t height,
                          std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FixtureSet set;
  set.manifest.categories = {{1, "aircraft"}, {2, "helicopter"}, {3, "uav"}};
  std::int64_t next_box = 1;
  for (int i = 0; i < count; ++i) {
    Rgb8Image img(width, height);
    PaintBackground(img, gen, u(gen) < 0.4);
    const int objects = 1 + static_cast<int>(u(gen) * 3);
    for (int k = 0; k < objects; ++k) {
      const double span = 14 + u(gen) * 34;
      const double cx = span + u(gen) * (width - 2 * span);
      const double cy = span + u(gen) * (height * 0.6 - span);
      GtBox box;
      box.id = next_box++;
      box.image_id = 100 + i;
      box.category_id = 1 + static_cast<int>(u(gen) * 3);
      box.bbox = PaintAircraft(img, gen, cx, cy, span);
      set.manifest.annotations.push_back(box);
    }
    std::ostringstream name;
    name << "frames/frame_" << i << ".png";
    set.manifest.images.push_back({100 + i, name.str(), width, height});
    set.images.push_back(std::move(img));
  }
  return set;
}

std::filesystem::path WriteFixtureSet(const FixtureSet& set,
                                      const std::filesystem::path& root) {
  for (std::size_t i = 0; i < set.images.size(); ++i) {
    const auto path = root / set.manifest.images[i].file_name;
    std::filesystem::create_directories(path.parent_path());
    SaveImage(set.images[i], path);
  }
  const auto manifest_path = root / "manifest.json";
  WriteManifest(set.manifest, manifest_path);
  return manifest_path;
}

Rgb8Image UniformImage(std::uint32_t width, std::uint32_t height,
                       std::uint8_t value) {
  Rgb8Image img(width, height);
  std::fill(img.mutable_pixels().begin(), img.mutable_pixels().end(), value);
  return img;
}

Rgb8Image Checkerboard(std::uint32_t width, std::uint32_t height, int cell,
                       std::uint8_t dark, std::uint8_t light) {
  Rgb8Image img(width, height);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const bool on = ((x / cell) + (y / cell)) % 2 == 0;
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = on ? light : dark;
    }
  }
  return img;
}

Rgb8Image RandomImage(std::uint32_t width, std::uint32_t height,
                      std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Rgb8Image img(width, height);
  for (auto& v : img.mutable_pixels()) v = static_cast<std::uint8_t>(gen());
  return img;
}

double Psnr(const Rgb8Image& a, const Rgb8Image& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    const double d = double(a.pixels()[i]) - double(b.pixels()[i]);
    sq += d * d;
  }
  const double mse = sq / a.pixels().size();
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

int MaxChannelDelta(const Rgb8Image& a, const Rgb8Image& b) {
  int worst = 0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    worst = std::max(worst, std::abs(int(a.pixels()[i]) - int(b.pixels()[i])));
  }
  return worst;
}

TempDir::TempDir(const std::string& tag) {
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("skyblight_" + tag + "_" + std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string ReadBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void WriteBytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

std::string TreeHash(const std::filesystem::path& root,
                     const std::vector<std::string>& exclude) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (std::find(exclude.begin(), exclude.end(), name) != exclude.end()) {
      continue;
    }
    std::ifstream in(entry.path(), std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    files.emplace_back(
        std::filesystem::relative(entry.path(), root).generic_string(),
        std::move(content));
  }
  std::sort(files.begin(), files.end());
  // Two independent 64-bit polynomial hashes; collisions are irrelevant at
  // this scale.
  std::uint64_t h1 = 1469598103934665603ULL;
  std::uint64_t h2 = 0x9e3779b97f4a7c15ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h1 = (h1 ^ c) * 0x100000001b3ULL;
      h2 = h2 * 31 + c + 0x632be59bd9b4e019ULL;
    }
    h1 = (h1 ^ 0xff) * 0x100000001b3ULL;
  };
  for (const auto& [name, content] : files) {
    feed(name);
    feed(content);
  }
  std::ostringstream out;
  out << files.size() << ":" << std::hex << h1 << h2;
  return out.str();
}

}  // namespace skyblight::testing
