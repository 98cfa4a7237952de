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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "skyblight/core/color.h"
#include "skyblight/core/error.h"
#include "skyblight/corruption/corruptions.h"
#include "skyblight/corruption/plasma.h"
#include "skyblight/corruption/schedule.h"
#include "skyblight/corruption/visibility.h"
#include "support/fixtures.h"

namespace skyblight {
namespace {

using testing::Checkerboard;
using testing::MaxChannelDelta;
using testing::RandomImage;
using testing::UniformImage;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected skyblight::Error";
  return ErrorCode::kInvalidArgument;
}

double LinearStd(const Rgb8Image& img, std::uint32_t x0, std::uint32_t y0,
                 std::uint32_t x1, std::uint32_t y1) {
  std::vector<double> l;
  for (std::uint32_t y = y0; y < y1; ++y) {
    for (std::uint32_t x = x0; x < x1; ++x) {
      l.push_back(0.2126 * std::pow(img.at(x, y, 0) / 255.0, 2.2) +
                  0.7152 * std::pow(img.at(x, y, 1) / 255.0, 2.2) +
                  0.0722 * std::pow(img.at(x, y, 2) / 255.0, 2.2));
    }
  }
  double mean = 0;
  for (double v : l) mean += v;
  mean /= l.size();
  double ss = 0;
  for (double v : l) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / l.size());
}

TEST(ApplyCorruptionTest, AllCellsKeepDimensionsAndAreDeterministic) {
  const Rgb8Image img = RandomImage(128, 96, 1);
  const ParamSchedule schedule = ParamSchedule::Default();
  for (CorruptionKind kind : kAllKinds) {
    for (Severity sev : kAllSeverities) {
      const CorruptionSpec spec = schedule.Resolve(kind, sev);
      const Rgb8Image a = ApplyCorruption(img, spec, 1234);
      const Rgb8Image b = ApplyCorruption(img, spec, 1234);
      EXPECT_EQ(a.width(), 128u);
      EXPECT_EQ(a.height(), 96u);
      EXPECT_EQ(a, b) << KindName(kind) << " " << sev.level();
    }
  }
}

TEST(ApplyCorruptionTest, StochasticKindsDependOnSeed) {
  const Rgb8Image img = RandomImage(96, 64, 2);
  const ParamSchedule schedule = ParamSchedule::Default();
  for (CorruptionKind kind : {CorruptionKind::kFog, CorruptionKind::kRain,
                              CorruptionKind::kLowLight,
                              CorruptionKind::kIsoNoise}) {
    const CorruptionSpec spec = schedule.Resolve(kind, Severity(3));
    EXPECT_NE(ApplyCorruption(img, spec, 1), ApplyCorruption(img, spec, 2))
        << KindName(kind);
  }
}

TEST(ApplyCorruptionTest, MismatchedParamsThrow) {
  CorruptionSpec spec;
  spec.kind = CorruptionKind::kRain;
  spec.params = FogParams{1.0, 0.5};
  EXPECT_EQ(CodeOf([&] { ApplyCorruption(RandomImage(8, 8, 1), spec, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(IdentityLimitTest, EveryKindHasANeutralSetting) {
  const Rgb8Image img = RandomImage(80, 60, 3);
  EXPECT_LE(MaxChannelDelta(img, FogCorrupt(img, {0.0, 0.5}, 9)), 1);
  EXPECT_LE(MaxChannelDelta(img, RainCorrupt(img, {0.0, 20.0, 0.5, 1.0}, 9)), 1);
  EXPECT_LE(MaxChannelDelta(img, LowLightCorrupt(img, {1.0, 1e9, 0.0}, 9)), 1);
  EXPECT_LE(MaxChannelDelta(img, IsoNoiseCorrupt(img, {1e9, 0.0}, 9)), 1);
  EXPECT_LE(MaxChannelDelta(img, ColorQuantCorrupt(img, {7})), 1);
  EXPECT_EQ(DefocusCorrupt(img, {0.0}), img);
}

TEST(FogTest, WhiteStaysAboveAirlight) {
  const Rgb8Image white = UniformImage(64, 64, 255);
  const ParamSchedule s = ParamSchedule::Default();
  for (Severity sev : kAllSeverities) {
    const Rgb8Image out =
        ApplyCorruption(white, s.Resolve(CorruptionKind::kFog, sev), 5);
    double mean = 0;
    for (std::uint8_t v : out.pixels()) mean += v;
    mean /= out.pixels().size();
    EXPECT_GE(mean, 0.92 * 255 - 1e-9) << sev.level();
  }
}

TEST(FogTest, LuminanceDoesNotDropBelowAirlight) {
  const Rgb8Image gray = UniformImage(64, 64, 120);
  const ParamSchedule s = ParamSchedule::Default();
  for (Severity sev : kAllSeverities) {
    const Rgb8Image out =
        ApplyCorruption(gray, s.Resolve(CorruptionKind::kFog, sev), 5);
    EXPECT_GE(MeanLinearLuminance(out), MeanLinearLuminance(gray));
  }
}

TEST(FogTest, CheckerboardContrastDecreasesWithSeverity) {
  const Rgb8Image board = Checkerboard(128, 128, 8, 30, 200);
  const ParamSchedule s = ParamSchedule::Default();
  double prev = LinearStd(board, 0, 0, 128, 128);
  for (Severity sev : kAllSeverities) {
    const double cur = LinearStd(
        ApplyCorruption(board, s.Resolve(CorruptionKind::kFog, sev), 77), 0, 0,
        128, 128);
    EXPECT_LT(cur, prev) << sev.level();
    prev = cur;
  }
}

TEST(RainTest, StreakCountFormula) {
  EXPECT_EQ(RainStreakCount(1024, 768, 240), 189);
  EXPECT_EQ(RainStreakCount(1000, 1000, 120), 120);
  EXPECT_EQ(RainStreakCount(100, 100, 0), 0);
  const RainLayout layout =
      PlanRainStreaks(1024, 768, {240, 24, 0.35, 0.9}, 42);
  EXPECT_EQ(layout.streaks.size(), 189u);
}

TEST(RainTest, LayoutWithinDeclaredRanges) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RainLayout layout = PlanRainStreaks(320, 240, {800, 30, .5, .8}, seed);
    EXPECT_GE(layout.angle_deg, -30.0);
    EXPECT_LE(layout.angle_deg, 30.0);
    for (const RainStreak& s : layout.streaks) {
      EXPECT_GE(s.x0, 0.0);
      EXPECT_LT(s.x0, 320.0);
      EXPECT_GE(s.y0, 0.0);
      EXPECT_LT(s.y0, 240.0);
      EXPECT_GE(s.length, 0.8 * 30 - 1e-9);
      EXPECT_LE(s.length, 1.2 * 30 + 1e-9);
    }
    EXPECT_EQ(layout, PlanRainStreaks(320, 240, {800, 30, .5, .8}, seed));
  }
}

TEST(RainTest, StreaksBrightenDarkSky) {
  const Rgb8Image dark = UniformImage(200, 150, 40);
  const Rgb8Image out = RainCorrupt(dark, {2000, 30, 0.6, 1.0}, 3);
  EXPECT_GT(MeanLinearLuminance(out), MeanLinearLuminance(dark));
  for (std::uint8_t v : out.pixels()) ASSERT_GE(v, 40);
}

TEST(RainTest, ContrastScaleAboutMidGray) {
  const Rgb8Image img = Checkerboard(32, 32, 4, 27, 227);
  const Rgb8Image out = RainCorrupt(img, {0.0, 10.0, 0.5, 0.5}, 1);
  // 127.5 + 0.5 * (v - 127.5)
  for (std::uint32_t x : {0u, 4u}) {
    EXPECT_EQ(out.at(x, 0, 0), img.at(x, 0, 0) == 27 ? 77 : 177);
  }
}

// Direct evaluation of the quantizer with floating-point rounding.
int QuantOracle(int v, int bits) {
  const double levels = std::pow(2.0, bits) - 1;
  return static_cast<int>(
      std::round(std::round(v * levels / 255.0) * 255.0 / levels));
}

TEST(ColorQuantTest, MatchesFormulaForEveryValue) {
  EXPECT_EQ(QuantizeChannel(200, 3), 182);
  for (int bits = 1; bits <= 7; ++bits) {
    std::set<int> distinct;
    for (int v = 0; v < 256; ++v) {
      const int q = QuantizeChannel(static_cast<std::uint8_t>(v), bits);
      EXPECT_EQ(q, QuantOracle(v, bits)) << v << " " << bits;
      distinct.insert(q);
    }
    EXPECT_EQ(QuantizeChannel(0, bits), 0);
    EXPECT_EQ(QuantizeChannel(255, bits), 255);
    EXPECT_LE(distinct.size(), std::size_t{1} << bits);
  }
}

TEST(ColorQuantTest, SeedIndependent) {
  const Rgb8Image img = RandomImage(40, 40, 4);
  CorruptionSpec spec = ParamSchedule::Default().Resolve(
      CorruptionKind::kColorQuant, Severity(2));
  EXPECT_EQ(ApplyCorruption(img, spec, 1), ApplyCorruption(img, spec, 999));
}

TEST(DefocusTest, KernelOracle) {
  const DiskKernel k = MakeDiskKernel(2.0);
  double sum = 0;
  for (double w : k.weights) sum += w;
  EXPECT_NEAR(sum, 1.0, 1e-6);
  double raw_sum = 0;
  for (int dy = -k.half; dy <= k.half; ++dy)
    for (int dx = -k.half; dx <= k.half; ++dx)
      raw_sum += std::clamp(2.5 - std::hypot(dx, dy), 0.0, 1.0);
  for (int dy = -k.half; dy <= k.half; ++dy) {
    for (int dx = -k.half; dx <= k.half; ++dx) {
      EXPECT_NEAR(k.at(dx, dy), k.at(-dy, dx), 1e-15);
      EXPECT_NEAR(k.at(dx, dy),
                  std::clamp(2.5 - std::hypot(dx, dy), 0.0, 1.0) / raw_sum,
                  1e-12);
    }
  }
  EXPECT_EQ(MakeDiskKernel(0.0).weights.size(), 9u);
  EXPECT_DOUBLE_EQ(MakeDiskKernel(0.0).at(0, 0), 1.0);
}

TEST(DefocusTest, PreservesConstants) {
  const Rgb8Image gray = UniformImage(50, 30, 133);
  EXPECT_EQ(DefocusCorrupt(gray, {5.5}), gray);
}

TEST(DefocusTest, MatchesDirectConvolution) {
  const Rgb8Image img = RandomImage(23, 17, 6);
  const double radius = 2.5;
  const DiskKernel k = MakeDiskKernel(radius);
  const Rgb8Image out = DefocusCorrupt(img, {radius});
  const int w = 23, h = 17;
  int worst = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        double acc = 0;
        for (int dy = -k.half; dy <= k.half; ++dy) {
          for (int dx = -k.half; dx <= k.half; ++dx) {
            const int sx = std::clamp(x + dx, 0, w - 1);
            const int sy = std::clamp(y + dy, 0, h - 1);
            acc += k.at(dx, dy) * img.at(sx, sy, c);
          }
        }
        const int expect = static_cast<int>(std::clamp(std::round(acc), 0.0, 255.0));
        worst = std::max(worst, std::abs(expect - out.at(x, y, c)));
      }
    }
  }
  EXPECT_LE(worst, 1);
}

TEST(SensorNoiseTest, IsoNoiseKeepsMeanAtEverySeverity) {
  const Rgb8Image gray = UniformImage(256, 256, 128);
  const double clean = MeanLinearLuminance(gray);
  const ParamSchedule s = ParamSchedule::Default();
  for (Severity sev : kAllSeverities) {
    const Rgb8Image out =
        ApplyCorruption(gray, s.Resolve(CorruptionKind::kIsoNoise, sev), 8);
    EXPECT_NEAR(MeanLinearLuminance(out) / clean, 1.0, 0.02) << sev.level();
  }
}

TEST(SensorNoiseTest, LowLightVarianceMatchesNoiseModel) {
  // Bright enough that clamping at zero is negligible.
  const Rgb8Image gray = UniformImage(256, 256, 200);
  const double l = DecodeGamma(200);
  const LowLightParams p{0.7, 80, 0.02};
  const Rgb8Image out = LowLightCorrupt(gray, p, 21);
  double sum = 0, sq = 0;
  for (std::uint8_t v : out.pixels()) {
    const double x = DecodeGamma(v);
    sum += x;
    sq += x * x;
  }
  const double n = static_cast<double>(out.pixels().size());
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  const double l1 = l * p.scale;
  EXPECT_NEAR(mean / l1, 1.0, 0.02);
  EXPECT_NEAR(var / (l1 / p.photons + p.read_sigma * p.read_sigma), 1.0, 0.10);
}

TEST(PlasmaTest, RangeDeterminismAndSeedSensitivity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PlasmaField f = PlasmaFractal(70, 45, 0.6, seed);
    ASSERT_EQ(f.values.size(), 70u * 45u);
    const auto [lo, hi] = std::minmax_element(f.values.begin(), f.values.end());
    EXPECT_GE(*lo, 0.0);
    EXPECT_LE(*hi, 1.0);
    EXPECT_DOUBLE_EQ(*lo, 0.0);
    EXPECT_DOUBLE_EQ(*hi, 1.0);
    EXPECT_EQ(f.values, PlasmaFractal(70, 45, 0.6, seed).values);
    const PlasmaField g = PlasmaFractal(70, 45, 0.6, seed + 100);
    int diff = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) diff += f.values[i] != g.values[i];
    EXPECT_GE(diff, static_cast<int>(f.values.size() / 100));
  }
}

TEST(PlasmaTest, DegenerateAndInvalidInputs) {
  const PlasmaField one = PlasmaFractal(1, 1, 0.5, 3);
  ASSERT_EQ(one.values.size(), 1u);
  EXPECT_EQ(one.values[0], 0.0);
  EXPECT_EQ(CodeOf([] { PlasmaFractal(0, 4, 0.5, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { PlasmaFractal(4, 4, 0.0, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { PlasmaFractal(4, 4, 1.5, 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(ScheduleTest, DefaultsAreValidAndMonotone) {
  const ParamSchedule s = ParamSchedule::Default();
  s.Validate();
  EXPECT_EQ(std::get<ColorQuantParams>(s.At(CorruptionKind::kColorQuant,
                                            Severity(1))).bits, 5);
  EXPECT_DOUBLE_EQ(std::get<RainParams>(s.At(CorruptionKind::kRain,
                                             Severity(2))).density, 240);
  EXPECT_FALSE(s.Resolve(CorruptionKind::kFog, Severity(1)).overridden);
}

TEST(ScheduleTest, JsonRoundTripAndPartialOverride) {
  const ParamSchedule s = ParamSchedule::Default();
  EXPECT_EQ(ParamSchedule::FromJsonText(s.ToJsonText()), s);
  const ParamSchedule o = ParamSchedule::FromJsonText(R"({"far_focus": [
      {"radius": 1.0}, {"radius": 2.0}, {"radius": 3.0}, {"radius": 4.0}]})");
  EXPECT_DOUBLE_EQ(
      std::get<DefocusParams>(o.At(CorruptionKind::kFarFocus, Severity(1))).radius,
      1.0);
  EXPECT_TRUE(o.Resolve(CorruptionKind::kFarFocus, Severity(1)).overridden);
  EXPECT_FALSE(o.Resolve(CorruptionKind::kFog, Severity(1)).overridden);
}

TEST(ScheduleTest, RejectsBadOverrides) {
  auto code = [](const char* text) {
    return CodeOf([&] { ParamSchedule::FromJsonText(text); });
  };
  EXPECT_EQ(code(R"({"color_quant": [{"bits": 5}, {"bits": 4}, {"bits": 3}]})"),
            ErrorCode::kInvalidSchedule);
  EXPECT_EQ(code(R"({"color_quant": [{"bits": 5}, {"bits": 5}, {"bits": 3},
                                      {"bits": 2}]})"),
            ErrorCode::kInvalidSchedule);
  EXPECT_EQ(code(R"({"color_quant": [{"bits": 9}, {"bits": 4}, {"bits": 3},
                                      {"bits": 2}]})"),
            ErrorCode::kInvalidSchedule);
  EXPECT_EQ(code(R"({"snow": []})"), ErrorCode::kInvalidSchedule);
  EXPECT_EQ(code("[1, 2"), ErrorCode::kInvalidSchedule);
}

TEST(VisibilityTest, IdentityAndErasure) {
  const Rgb8Image img = Checkerboard(64, 64, 4, 20, 230);
  const GtBox box{1, 5, 1, {8, 8, 24, 24}};
  const VisibilityReport same = VisibilityCheck(img, img, box);
  EXPECT_DOUBLE_EQ(same.contrast_retention, 1.0);
  EXPECT_TRUE(same.pass);
  EXPECT_EQ(same.image_id, 5);
  EXPECT_EQ(same.box_id, 1);

  const Rgb8Image erased = UniformImage(64, 64, 128);
  const VisibilityReport gone = VisibilityCheck(img, erased, box, 0.01);
  EXPECT_DOUBLE_EQ(gone.contrast_retention, 0.0);
  EXPECT_FALSE(gone.pass);
}

TEST(VisibilityTest, QuantizedCheckerboardMatchesOracle) {
  const Rgb8Image img = Checkerboard(64, 64, 4, 60, 190);
  const Rgb8Image q = ColorQuantCorrupt(img, {2});
  const GtBox box{1, 1, 1, {10, 10, 30, 30}};
  const VisibilityReport r = VisibilityCheck(img, q, box);
  const double oracle =
      LinearStd(q, 10, 10, 40, 40) / LinearStd(img, 10, 10, 40, 40);
  EXPECT_NEAR(r.contrast_retention, oracle, 1e-9);
  EXPECT_GT(r.contrast_retention, 0.5);
}

TEST(VisibilityTest, FlatCleanCropAndDegenerateBoxes) {
  const Rgb8Image flat = UniformImage(32, 32, 90);
  const Rgb8Image noisy = RandomImage(32, 32, 2);
  EXPECT_DOUBLE_EQ(
      VisibilityCheck(flat, noisy, {1, 1, 1, {2, 2, 10, 10}}).contrast_retention,
      1.0);
  EXPECT_EQ(CodeOf([&] { VisibilityCheck(flat, noisy, {1, 1, 1, {2, 2, 1.5, 2}}); }),
            ErrorCode::kDegenerateBox);
  EXPECT_EQ(CodeOf([&] {
              VisibilityCheck(flat, UniformImage(16, 16, 0), {1, 1, 1, {2, 2, 5, 5}});
            }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace skyblight
