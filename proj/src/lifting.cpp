#include "sst/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "sst/boundary.hpp"

namespace sst {

WaveletCoeffs WaveletCoeffs::of(WaveletKind kind) {
  switch (kind) {
    case WaveletKind::Haar: return {kind, {-1.0}, {0.5}};
    case WaveletKind::LeGall53: return {kind, {-0.5}, {0.25}};
    case WaveletKind::Cdf97:
      return {kind, {-1.58613434205992, 0.882911075530940}, {-0.05298011857295, 0.443506852043967}};
  }
  throw ConfigError("unknown wavelet");
}

std::string_view to_string(WaveletKind kind) {
  switch (kind) {
    case WaveletKind::Haar: return "haar";
    case WaveletKind::LeGall53: return "5/3";
    case WaveletKind::Cdf97: return "9/7";
  }
  return "?";
}

std::optional<WaveletKind> parse_wavelet(std::string_view name) {
  if (name == "haar") return WaveletKind::Haar;
  if (name == "5/3" || name == "53") return WaveletKind::LeGall53;
  if (name == "9/7" || name == "97") return WaveletKind::Cdf97;
  return std::nullopt;
}

namespace {

void check_stage(const LiftingStage& stage, const WeightField* weights, Index rows, Index cols) {
  if (stage.target < 0 || stage.target > 3) throw ConfigError("stage target out of range");
  for (const auto& s : stage.sources) {
    if (s.channel < 0 || s.channel > 3) throw ConfigError("stage source out of range");
    if (s.channel == stage.target) throw ConfigError("stage reads its own target");
  }
  if ((stage.weighting != Weighting::None) != (weights != nullptr)) {
    throw ConfigError("weight field must be given exactly for edge-aware stages");
  }
  if (weights && (weights->w1.rows() != rows || weights->w1.cols() != cols)) {
    throw DimensionError("weight field does not match plane size");
  }
}

Index stencil_margin(const LiftingStage& stage) {
  Index m = 0;
  for (const auto& s : stage.sources) {
    for (const Tap& t : s.stencil.taps) m = std::max<Index>({m, std::abs(t.dy), std::abs(t.dx)});
  }
  return m;
}

constexpr double kFloorSnap = 1e-9;

template <typename Scalar>
Plane<Scalar> rounded(const RealPlane& increment, const LiftingStage& stage) {
  if (stage.rounding == Rounding::None) {
    if constexpr (std::is_integral_v<Scalar>) {
      throw ConfigError("integer stages must round");
    } else {
      return increment;
    }
  }
  if constexpr (std::is_integral_v<Scalar>) {
    if (stage.role == StageRole::Predict) return (-(-increment).floor()).template cast<Scalar>();
    return increment.floor().template cast<Scalar>();
  } else {
    // Real planes reach a rounded stage with roundoff from unrounded stages
    // (XSTT-II 9/7 outer steps on decode). Snap near-integers first so the
    // floor lands where it did on the encoder side.
    const RealPlane nearest = increment.round();
    const RealPlane snapped = ((increment - nearest).abs() < kFloorSnap).select(nearest, increment);
    if (stage.role == StageRole::Predict) return -(-snapped).floor();
    return snapped.floor();
  }
}

}  // namespace

template <typename Scalar>
RealPlane stage_increment(const ChannelQuad<Scalar>& quad, const LiftingStage& stage,
                          const WeightField* weights) {
  const Index rows = quad.rows();
  const Index cols = quad.cols();
  check_stage(stage, weights, rows, cols);

  std::array<RealPlane, 3> scale;  // indexed by WeightGroup
  if (weights) {
    scale[1] = 2.0 * weights->fraction;
    scale[2] = 2.0 * (weights->w2 / (weights->w1 + weights->w2));
  }

  const Index margin = stencil_margin(stage);
  RealPlane increment = RealPlane::Zero(rows, cols);
  for (const auto& s : stage.sources) {
    const RealPlane padded = pad_symmetric(quad[s.channel].template cast<double>(), margin);
    for (const Tap& t : s.stencil.taps) {
      const auto block = padded.block(margin + t.dy, margin + t.dx, rows, cols);
      if (t.group == WeightGroup::None || !weights) {
        increment += t.weight * block;
      } else {
        increment += (t.weight * scale[static_cast<std::size_t>(t.group)]) * block;
      }
    }
  }
  return increment;
}

template <typename Scalar>
void apply_stage(ChannelQuad<Scalar>& quad, const LiftingStage& stage, const WeightField* weights) {
  quad[stage.target] += rounded<Scalar>(stage_increment(quad, stage, weights), stage);
}

template <typename Scalar>
void invert_stage(ChannelQuad<Scalar>& quad, const LiftingStage& stage, const WeightField* weights) {
  quad[stage.target] -= rounded<Scalar>(stage_increment(quad, stage, weights), stage);
}

template RealPlane stage_increment<std::int32_t>(const ChannelQuad<std::int32_t>&, const LiftingStage&,
                                                 const WeightField*);
template RealPlane stage_increment<double>(const ChannelQuad<double>&, const LiftingStage&, const WeightField*);
template void apply_stage<std::int32_t>(ChannelQuad<std::int32_t>&, const LiftingStage&, const WeightField*);
template void apply_stage<double>(ChannelQuad<double>&, const LiftingStage&, const WeightField*);
template void invert_stage<std::int32_t>(ChannelQuad<std::int32_t>&, const LiftingStage&, const WeightField*);
template void invert_stage<double>(ChannelQuad<double>&, const LiftingStage&, const WeightField*);

Eigen::Matrix4d dc_matrix(const StagePlan& plan) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  for (const LiftingStage& stage : plan.stages) {
    Eigen::Matrix4d step = Eigen::Matrix4d::Identity();
    for (const auto& s : stage.sources) step(stage.target, s.channel) += s.stencil.tap_sum();
    m = step * m;
  }
  Eigen::Matrix4d out;
  for (int s = 0; s < 4; ++s) out.row(s) = m.row(plan.output[static_cast<std::size_t>(s)]);
  return out;
}

}  // namespace sst
