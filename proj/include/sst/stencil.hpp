#pragma once

#include <cstdint>
#include <vector>

namespace sst {

/// Which edge-aware weight share scales a tap. Unweighted taps use None.
enum class WeightGroup : std::uint8_t { None, W1, W2 };

/// One term of a lifting polynomial. Offsets are in macropixels: a delay z1
/// (rows) contributes dy = -1, its inverse dy = +1; z2 (columns) likewise dx.
struct Tap {
  int dy = 0;
  int dx = 0;
  double weight = 0.0;
  WeightGroup group = WeightGroup::None;

  bool operator==(const Tap&) const = default;
};

struct Stencil {
  std::vector<Tap> taps;

  double tap_sum() const {
    double s = 0.0;
    for (const Tap& t : taps) s += t.weight;
    return s;
  }

  bool operator==(const Stencil&) const = default;
};

}  // namespace sst
