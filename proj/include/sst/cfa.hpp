#pragma once

// Bayer mosaics and the quarter-resolution planes they decompose into.
//
// Macropixel (i, j) covers mosaic pixels rows 2i..2i+1, cols 2j..2j+1 of an
// RGGB array:
//
//     R  G2        R  = (2i,   2j)     G2 = (2i,   2j+1)
//     G1 B         G1 = (2i+1, 2j)     B  = (2i+1, 2j+1)
//
// G1 is the green below R (blue row), G2 the green right of R (red row). With
// the row delay on the first lifting axis this is the assignment under which
// the XSTT-I with 5/3 filters reproduces the Star-Tetrix transform exactly.

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <type_traits>

#include "sst/errors.hpp"

namespace sst {

template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using SamplePlane = Plane<std::uint16_t>;
using IntPlane = Plane<std::int32_t>;
using RealPlane = Plane<double>;

using Index = Eigen::Index;

enum class CfaPhase { RGGB };

enum class Mode { IntegerLossless, RealLossy };

template <typename Scalar>
inline constexpr Mode mode_of = std::is_integral_v<Scalar> ? Mode::IntegerLossless : Mode::RealLossy;

/// Single-plane CFA raw image. Immutable once constructed.
class BayerMosaic {
 public:
  /// Throws DimensionError for empty/odd sizes, ConfigError for a bit depth
  /// outside [8, 16] and RangeError for samples >= 2^bit_depth.
  BayerMosaic(SamplePlane samples, int bit_depth, CfaPhase phase = CfaPhase::RGGB);

  int width() const { return static_cast<int>(samples_.cols()); }
  int height() const { return static_cast<int>(samples_.rows()); }
  int bit_depth() const { return bit_depth_; }
  CfaPhase phase() const { return phase_; }
  std::uint32_t max_value() const { return (1u << bit_depth_) - 1u; }
  const SamplePlane& samples() const { return samples_; }

  bool operator==(const BayerMosaic& other) const {
    return bit_depth_ == other.bit_depth_ && phase_ == other.phase_ &&
           samples_.rows() == other.samples_.rows() && samples_.cols() == other.samples_.cols() &&
           (samples_ == other.samples_).all();
  }

 private:
  SamplePlane samples_;
  int bit_depth_;
  CfaPhase phase_;
};

enum Channel : int { kG1 = 0, kG2 = 1, kB = 2, kR = 3 };

/// Four quarter-resolution planes, indexed by Channel. During a transform the
/// four slots are reused for intermediate and final components.
template <typename Scalar>
struct ChannelQuad {
  std::array<Plane<Scalar>, 4> planes;
  int bit_depth = 0;

  Plane<Scalar>& operator[](int c) { return planes[static_cast<std::size_t>(c)]; }
  const Plane<Scalar>& operator[](int c) const { return planes[static_cast<std::size_t>(c)]; }

  const Plane<Scalar>& g1() const { return planes[kG1]; }
  const Plane<Scalar>& g2() const { return planes[kG2]; }
  const Plane<Scalar>& b() const { return planes[kB]; }
  const Plane<Scalar>& r() const { return planes[kR]; }

  Index rows() const { return planes[0].rows(); }
  Index cols() const { return planes[0].cols(); }
};

enum Subband : int { kY = 0, kDg = 1, kC1 = 2, kC2 = 3 };

/// Decorrelated {Y, Dg, C1, C2}. The arithmetic mode is fixed by Scalar:
/// int32_t for integer-lossless, double for real-lossy.
template <typename Scalar>
struct SubbandQuad {
  static constexpr Mode mode = mode_of<Scalar>;

  std::array<Plane<Scalar>, 4> planes;
  int bit_depth = 0;
  /// Offset added to Dg/C1/C2 on unsigned export; always 0 in memory.
  std::int64_t dc_offset = 0;

  Plane<Scalar>& operator[](int s) { return planes[static_cast<std::size_t>(s)]; }
  const Plane<Scalar>& operator[](int s) const { return planes[static_cast<std::size_t>(s)]; }

  const Plane<Scalar>& y() const { return planes[kY]; }
  const Plane<Scalar>& dg() const { return planes[kDg]; }
  const Plane<Scalar>& c1() const { return planes[kC1]; }
  const Plane<Scalar>& c2() const { return planes[kC2]; }

  Index rows() const { return planes[0].rows(); }
  Index cols() const { return planes[0].cols(); }
};

/// Throws DimensionError unless all four planes are non-empty and equal-sized.
template <typename Quad>
void check_same_dims(const Quad& q) {
  const Index rows = q.planes[0].rows();
  const Index cols = q.planes[0].cols();
  if (rows == 0 || cols == 0) throw DimensionError("empty plane");
  for (const auto& p : q.planes) {
    if (p.rows() != rows || p.cols() != cols) throw DimensionError("planes differ in size");
  }
}

template <typename Scalar>
ChannelQuad<Scalar> split_mosaic(const BayerMosaic& m);

/// Exact inverse of split_mosaic. Throws RangeError if any sample is outside
/// [0, 2^bit_depth).
BayerMosaic merge_quad(const ChannelQuad<std::int32_t>& q);

/// Lossy counterpart of merge_quad: rounds to nearest and clamps to range.
BayerMosaic round_to_mosaic(const ChannelQuad<double>& q);

}  // namespace sst
