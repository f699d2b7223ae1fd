#pragma once

// Spectral-spatial transform catalog: three WSSTs, XSTT-I and XSTT-II, each
// with Haar, 5/3 or 9/7 lifting and optional edge-aware predict steps.
//
// Every family is a fixed list of lifting stages over the four channel slots;
// channel permutations between wavelet blocks are folded into the slot
// indices, and StagePlan::output says where Y, Dg, C1, C2 end up.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sst/cfa.hpp"
#include "sst/edge_aware.hpp"
#include "sst/lifting.hpp"

namespace sst {

enum class Family { WsstYDgCbCr, WsstYDgCoCg, WsstYDgCoCg2, XsttI, XsttII };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::WsstYDgCbCr, Family::WsstYDgCoCg,
                                                       Family::WsstYDgCoCg2, Family::XsttI, Family::XsttII};
inline constexpr std::array<WaveletKind, 3> kAllWavelets = {WaveletKind::Haar, WaveletKind::LeGall53,
                                                            WaveletKind::Cdf97};

struct TransformSpec {
  Family family = Family::XsttI;
  WaveletKind wavelet = WaveletKind::LeGall53;
  bool edge_aware = false;
  double gamma = 1.0;
  double epsilon = 1e-8;
  Mode mode = Mode::IntegerLossless;

  /// Spec with the mode's default gamma (1 lossless, 1/2 lossy).
  static TransformSpec make(Family family, WaveletKind wavelet, bool edge_aware,
                            Mode mode = Mode::IntegerLossless);

  EdgeParams edge_params() const { return {gamma, epsilon}; }

  bool operator==(const TransformSpec&) const = default;
};

/// Throws ConfigError for gamma < 0 or epsilon <= 0.
void validate(const TransformSpec& spec);

StagePlan build_stages(const TransformSpec& spec);

/// Weight field used by one edge-aware stage.
struct WeightLogEntry {
  std::size_t stage = 0;
  WeightField field;
};
using WeightLog = std::vector<WeightLogEntry>;

template <typename Scalar>
struct ForwardResult {
  SubbandQuad<Scalar> subbands;
  WeightLog weights;  ///< encoder-side fields, for analysis only
};

/// Scalar must match spec.mode (int32_t / double), otherwise ConfigError.
template <typename Scalar>
ForwardResult<Scalar> forward(const BayerMosaic& mosaic, const TransformSpec& spec);

/// Runs the inverted stages in reverse, recomputing every weight field from
/// the reconstructed planes. `decoder_log`, if given, receives those fields.
template <typename Scalar>
ChannelQuad<Scalar> inverse_channels(const SubbandQuad<Scalar>& subbands, const TransformSpec& spec,
                                     WeightLog* decoder_log = nullptr);

/// Bit-exact reconstruction of an integer-mode forward.
BayerMosaic inverse(const SubbandQuad<std::int32_t>& subbands, const TransformSpec& spec);

/// Real-mode reconstruction, rounded and clamped to the sample range.
BayerMosaic inverse(const SubbandQuad<double>& subbands, const TransformSpec& spec,
                    WeightLog* decoder_log = nullptr);

/// The Star-Tetrix transform evaluated straight from its four defining
/// equations on the mosaic grid (reference for XSTT-I with 5/3).
SubbandQuad<std::int32_t> stt_forward_direct(const BayerMosaic& mosaic);

std::string_view to_string(Family family);
std::string_view to_string(Mode mode);
std::optional<Family> parse_family(std::string_view name);
std::optional<Mode> parse_mode(std::string_view name);

/// "xstt-i/5/3", "exstt-ii/9/7" etc.
std::string describe(const TransformSpec& spec);

}  // namespace sst
