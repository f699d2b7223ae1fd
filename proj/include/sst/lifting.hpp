#pragma once

// Lifting-step primitives on channel quads.
//
// A stage adds to one target channel a stencil-weighted sum of other
// channels. Predict stages subtract floor(prediction), update stages add
// floor(increment); both are undone by recomputing the identical rounded
// quantity from the unchanged sources, so integer stages invert bit-exactly.

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sst/cfa.hpp"
#include "sst/edge_aware.hpp"
#include "sst/stencil.hpp"

namespace sst {

enum class WaveletKind { Haar, LeGall53, Cdf97 };

/// Predict/update coefficients p_k, u_k of a lifting wavelet.
struct WaveletCoeffs {
  WaveletKind kind = WaveletKind::LeGall53;
  std::vector<double> p;
  std::vector<double> u;

  int steps() const { return static_cast<int>(p.size()); }

  static WaveletCoeffs of(WaveletKind kind);
};

enum class StageRole { Predict, Update };
enum class Rounding { Floor, None };
enum class Weighting { None, Diagonal, HorizontalVertical };

struct StageSource {
  int channel = 0;
  Stencil stencil;
};

struct LiftingStage {
  StageRole role = StageRole::Predict;
  int target = 0;
  std::vector<StageSource> sources;
  Rounding rounding = Rounding::Floor;
  Weighting weighting = Weighting::None;
  DiagKind diag_kind = DiagKind::G1ToG2;
  HvKind hv_kind = HvKind::ToR;
  /// Planes the weight field is computed from: the diagonal source, or
  /// (G1-slot, G2-slot) for horizontal-vertical weighting.
  std::array<int, 2> weight_channels{0, 1};
};

/// Ordered stages plus the slot holding each output subband (Y, Dg, C1, C2).
struct StagePlan {
  std::vector<LiftingStage> stages;
  std::array<int, 4> output{0, 1, 2, 3};
};

/// Sum over sources and taps of coefficient * source, before rounding. Weighted
/// taps scale their coefficient by 2 * W_g/(W1+W2) at each pixel.
template <typename Scalar>
RealPlane stage_increment(const ChannelQuad<Scalar>& quad, const LiftingStage& stage,
                          const WeightField* weights);

/// Throws ConfigError for a bad channel index, a missing/unexpected weight
/// field or an unrounded integer stage; DimensionError for a field of the
/// wrong size.
template <typename Scalar>
void apply_stage(ChannelQuad<Scalar>& quad, const LiftingStage& stage, const WeightField* weights = nullptr);

template <typename Scalar>
void invert_stage(ChannelQuad<Scalar>& quad, const LiftingStage& stage, const WeightField* weights = nullptr);

/// The plan as a linear map at zero frequency (all delays 1, no rounding,
/// neutral weights). Rows Y, Dg, C1, C2; columns G1, G2, B, R.
Eigen::Matrix4d dc_matrix(const StagePlan& plan);

std::string_view to_string(WaveletKind kind);
std::optional<WaveletKind> parse_wavelet(std::string_view name);

}  // namespace sst
