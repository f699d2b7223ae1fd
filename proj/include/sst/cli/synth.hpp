#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sst/cfa.hpp"

namespace sst {

enum class SynthKind { Constant, Ramp, DiagEdge45, DiagEdge135, HStripes, VStripes, Noise };

inline constexpr std::array<SynthKind, 7> kAllSynthKinds = {
    SynthKind::Constant, SynthKind::Ramp,     SynthKind::DiagEdge45, SynthKind::DiagEdge135,
    SynthKind::HStripes, SynthKind::VStripes, SynthKind::Noise};

struct SynthParams {
  int width = 64;
  int height = 64;
  int bit_depth = 12;
  std::uint32_t seed = 1;
  /// Edge and stripe kinds get uniform integer noise in [-scene_noise,
  /// scene_noise] on top of the two-region scene. Without it the flat regions
  /// are exactly flat, which makes edge-aware weights degenerate.
  int scene_noise = 4;
};

/// Deterministic test mosaic. Edge and stripe kinds sample a two-region
/// colour scene through the RGGB filter, so the two regions differ in every
/// channel by a different amount. Constant and Ramp are noise-free. All
/// randomness is bit-stable across standard libraries (raw mt19937 output,
/// no distribution objects).
BayerMosaic synthesize(SynthKind kind, const SynthParams& params);

std::string_view to_string(SynthKind kind);
std::optional<SynthKind> parse_synth_kind(std::string_view name);

}  // namespace sst
