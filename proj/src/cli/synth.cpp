#include "sst/cli/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sst {

namespace {

// Scene colours as fractions of full scale, indexed R, G, B.
constexpr std::array<double, 3> kDark = {0.30, 0.45, 0.20};
constexpr std::array<double, 3> kBright = {0.70, 0.60, 0.80};
constexpr int kStripePeriod = 8;

int cfa_colour(Index y, Index x) {
  if (y % 2 == 0 && x % 2 == 0) return 0;
  if (y % 2 == 1 && x % 2 == 1) return 2;
  return 1;
}

std::uint16_t level(double fraction, std::uint32_t max_value) {
  return static_cast<std::uint16_t>(std::lround(fraction * max_value));
}

}  // namespace

BayerMosaic synthesize(SynthKind kind, const SynthParams& p) {
  const std::uint32_t max_value = (p.bit_depth >= 1 && p.bit_depth <= 16) ? (1u << p.bit_depth) - 1u : 0u;
  SamplePlane s(p.height, p.width);
  std::mt19937 rng(p.seed);
  const Index w = p.width;
  const Index h = p.height;

  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      const int c = cfa_colour(y, x);
      bool bright = false;
      switch (kind) {
        case SynthKind::Constant:
          s(y, x) = static_cast<std::uint16_t>((max_value + 1) / 2);
          continue;
        case SynthKind::Ramp: {
          const double denom = static_cast<double>(std::max<Index>(w + h - 2, 1));
          s(y, x) = level(static_cast<double>(x + y) / denom, max_value);
          continue;
        }
        case SynthKind::Noise:
          s(y, x) = static_cast<std::uint16_t>(rng() >> (32 - p.bit_depth));
          continue;
        case SynthKind::DiagEdge45:
          bright = 2 * (x + y) >= w + h;
          break;
        case SynthKind::DiagEdge135:
          bright = x >= y + (w - h) / 2;
          break;
        case SynthKind::HStripes:
          bright = (y / (kStripePeriod / 2)) % 2 == 1;
          break;
        case SynthKind::VStripes:
          bright = (x / (kStripePeriod / 2)) % 2 == 1;
          break;
      }
      std::int64_t v = level(bright ? kBright[c] : kDark[c], max_value);
      if (p.scene_noise > 0) {
        v += static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(2 * p.scene_noise + 1)) - p.scene_noise;
      }
      s(y, x) = static_cast<std::uint16_t>(std::clamp<std::int64_t>(v, 0, max_value));
    }
  }
  return BayerMosaic(std::move(s), p.bit_depth);
}

std::string_view to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::Constant: return "constant";
    case SynthKind::Ramp: return "ramp";
    case SynthKind::DiagEdge45: return "diag-edge-45";
    case SynthKind::DiagEdge135: return "diag-edge-135";
    case SynthKind::HStripes: return "h-stripes";
    case SynthKind::VStripes: return "v-stripes";
    case SynthKind::Noise: return "noise";
  }
  return "?";
}

std::optional<SynthKind> parse_synth_kind(std::string_view name) {
  for (SynthKind k : kAllSynthKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace sst
