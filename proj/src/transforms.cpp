#include "sst/transforms.hpp"

#include <cmath>

namespace sst {

namespace {

constexpr bool kConj = true;

// Taps of P_k(z_axis) = (1 + z̄_axis) p_k or U_k(z_axis) = (1 + z_axis) u_k,
// scaled by `scale`. `conj` substitutes z̄ for z. Haar is a single tap.
Stencil poly1(WaveletKind kind, double coeff, StageRole role, int axis, bool conj, double scale,
              WeightGroup group = WeightGroup::None) {
  const double w = scale * coeff;
  if (kind == WaveletKind::Haar) return {{{0, 0, w, group}}};
  int step = role == StageRole::Predict ? 1 : -1;
  if (conj) step = -step;
  return {{{0, 0, w, group}, {axis == 1 ? step : 0, axis == 2 ? step : 0, w, group}}};
}

// Taps of P_k(z1,z2) = 1/2 (1 + z̄1 + z̄2 + z̄1z̄2) p_k or the matching U_k.
// With `diagonal_groups` the {1, product} pair is tagged W1 and the
// single-delay pair W2.
Stencil poly2(WaveletKind kind, double coeff, StageRole role, bool conj1, bool conj2, bool diagonal_groups) {
  const double w = 0.5 * coeff;
  if (kind == WaveletKind::Haar) return {{{0, 0, 2.0 * w}}};
  const int base = role == StageRole::Predict ? 1 : -1;
  const int s1 = conj1 ? -base : base;
  const int s2 = conj2 ? -base : base;
  const WeightGroup g1 = diagonal_groups ? WeightGroup::W1 : WeightGroup::None;
  const WeightGroup g2 = diagonal_groups ? WeightGroup::W2 : WeightGroup::None;
  return {{{0, 0, w, g1}, {s1, 0, w, g2}, {0, s2, w, g2}, {s1, s2, w, g1}}};
}

class PlanBuilder {
 public:
  PlanBuilder(const TransformSpec& spec) : spec_(spec) {}

  Rounding rounding() const {
    return spec_.mode == Mode::IntegerLossless ? Rounding::Floor : Rounding::None;
  }

  // DWT_2(z1,z2) with optional conjugated delays: `second` is predicted from
  // `first`, then `first` is updated from `second`.
  void dwt2_diagonal(int first, int second, bool conj1, bool conj2, const WaveletCoeffs& w, Rounding r) {
    const bool weighted = spec_.edge_aware && w.kind != WaveletKind::Haar;
    for (int k = 0; k < w.steps(); ++k) {
      LiftingStage predict{StageRole::Predict, second,
                           {{first, poly2(w.kind, w.p[k], StageRole::Predict, conj1, conj2, weighted)}}, r};
      if (weighted) {
        predict.weighting = Weighting::Diagonal;
        // Every diagonal block in the catalog is DWT_2(z̄1, z2) or DWT_2(z̄1, z̄2).
        predict.diag_kind = conj2 ? DiagKind::BToR : DiagKind::G1ToG2;
        predict.weight_channels = {first, first};
      }
      plan_.stages.push_back(std::move(predict));
      plan_.stages.push_back(
          {StageRole::Update, first, {{second, poly2(w.kind, w.u[k], StageRole::Update, conj1, conj2, false)}}, r});
    }
  }

  // DWT_2(z_axis), conjugated if `conj`.
  void dwt2_line(int first, int second, int axis, bool conj, const WaveletCoeffs& w, Rounding r) {
    for (int k = 0; k < w.steps(); ++k) {
      plan_.stages.push_back(
          {StageRole::Predict, second, {{first, poly1(w.kind, w.p[k], StageRole::Predict, axis, conj, 1.0)}}, r});
      plan_.stages.push_back(
          {StageRole::Update, first, {{second, poly1(w.kind, w.u[k], StageRole::Update, axis, conj, 1.0)}}, r});
    }
  }

  // DWT_3(z̄1, z2) on (Y', B, R): B and R predicted from Y', then Y' updated
  // from both with weight 1/2.
  void dwt3(int luma, int b, int r_slot, const WaveletCoeffs& w, Rounding r) {
    for (int k = 0; k < w.steps(); ++k) {
      plan_.stages.push_back(
          {StageRole::Predict, b, {{luma, poly1(w.kind, w.p[k], StageRole::Predict, 1, kConj, 1.0)}}, r});
      plan_.stages.push_back(
          {StageRole::Predict, r_slot, {{luma, poly1(w.kind, w.p[k], StageRole::Predict, 2, !kConj, 1.0)}}, r});
      plan_.stages.push_back({StageRole::Update,
                              luma,
                              {{b, poly1(w.kind, w.u[k], StageRole::Update, 1, kConj, 0.5)},
                               {r_slot, poly1(w.kind, w.u[k], StageRole::Update, 2, !kConj, 0.5)}},
                              r});
    }
  }

  // [B; R] += Wp_k [G1; G2]. With edge awareness each green pair is scaled
  // by the share of the weight belonging to its axis.
  void star_predict(const WaveletCoeffs& w, int k, Rounding r) {
    const bool weighted = spec_.edge_aware;
    const auto g = [weighted](WeightGroup group) { return weighted ? group : WeightGroup::None; };
    LiftingStage to_b{StageRole::Predict,
                      kB,
                      {{kG1, poly1(w.kind, w.p[k], StageRole::Predict, 2, !kConj, 0.5, g(WeightGroup::W2))},
                       {kG2, poly1(w.kind, w.p[k], StageRole::Predict, 1, !kConj, 0.5, g(WeightGroup::W1))}},
                      r};
    LiftingStage to_r{StageRole::Predict,
                      kR,
                      {{kG1, poly1(w.kind, w.p[k], StageRole::Predict, 1, kConj, 0.5, g(WeightGroup::W1))},
                       {kG2, poly1(w.kind, w.p[k], StageRole::Predict, 2, kConj, 0.5, g(WeightGroup::W2))}},
                      r};
    if (weighted) {
      to_b.weighting = to_r.weighting = Weighting::HorizontalVertical;
      to_b.hv_kind = HvKind::ToB;
      to_r.hv_kind = HvKind::ToR;
      to_b.weight_channels = to_r.weight_channels = {kG1, kG2};
    }
    plan_.stages.push_back(std::move(to_b));
    plan_.stages.push_back(std::move(to_r));
  }

  // [G1; G2] += Wu_k [B; R]; the G2 row is dropped for XSTT-II.
  void star_update(const WaveletCoeffs& w, int k, Rounding r, bool with_g2) {
    plan_.stages.push_back({StageRole::Update,
                            kG1,
                            {{kB, poly1(w.kind, w.u[k], StageRole::Update, 2, !kConj, 0.5)},
                             {kR, poly1(w.kind, w.u[k], StageRole::Update, 1, kConj, 0.5)}},
                            r});
    if (!with_g2) return;
    plan_.stages.push_back({StageRole::Update,
                            kG2,
                            {{kB, poly1(w.kind, w.u[k], StageRole::Update, 1, !kConj, 0.5)},
                             {kR, poly1(w.kind, w.u[k], StageRole::Update, 2, kConj, 0.5)}},
                            r});
  }

  StagePlan finish(std::array<int, 4> output) {
    plan_.output = output;
    return std::move(plan_);
  }

 private:
  const TransformSpec& spec_;
  StagePlan plan_;
};

}  // namespace

TransformSpec TransformSpec::make(Family family, WaveletKind wavelet, bool edge_aware, Mode mode) {
  TransformSpec s;
  s.family = family;
  s.wavelet = wavelet;
  s.edge_aware = edge_aware;
  s.mode = mode;
  s.gamma = EdgeParams::for_mode(mode).gamma;
  s.epsilon = EdgeParams::for_mode(mode).epsilon;
  return s;
}

void validate(const TransformSpec& spec) {
  if (!(spec.gamma >= 0.0) || !std::isfinite(spec.gamma)) throw ConfigError("gamma must be >= 0");
  if (!(spec.epsilon > 0.0) || !std::isfinite(spec.epsilon)) throw ConfigError("epsilon must be > 0");
}

StagePlan build_stages(const TransformSpec& spec) {
  validate(spec);
  const WaveletCoeffs w = WaveletCoeffs::of(spec.wavelet);
  PlanBuilder b(spec);
  const Rounding r = b.rounding();

  switch (spec.family) {
    case Family::WsstYDgCbCr:
      b.dwt2_diagonal(kG1, kG2, kConj, !kConj, w, r);
      b.dwt3(kG1, kB, kR, w, r);
      return b.finish({kG1, kG2, kB, kR});

    case Family::WsstYDgCoCg:
      b.dwt2_diagonal(kG1, kG2, kConj, !kConj, w, r);
      b.dwt2_diagonal(kB, kR, kConj, kConj, w, r);
      b.dwt2_line(kB, kG1, 2, kConj, w, r);
      return b.finish({kB, kG2, kR, kG1});

    case Family::WsstYDgCoCg2:
      b.dwt2_line(kG1, kB, 2, !kConj, w, r);
      b.dwt2_line(kR, kG2, 2, !kConj, w, r);
      b.dwt2_line(kR, kG1, 1, !kConj, w, r);
      b.dwt2_line(kG2, kB, 1, !kConj, w, r);
      b.dwt2_diagonal(kG1, kG2, kConj, !kConj, w, r);
      return b.finish({kR, kG2, kG1, kB});

    case Family::XsttI:
      for (int k = 0; k < w.steps(); ++k) {
        b.star_predict(w, k, r);
        b.star_update(w, k, r, true);
      }
      b.dwt2_diagonal(kG1, kG2, kConj, !kConj, w, r);
      return b.finish({kG1, kG2, kB, kR});

    case Family::XsttII: {
      // Outer steps take a single predict/update pair, so 9/7 falls back to
      // 5/3 there, rounded even in real mode.
      const bool outer_is_53 = spec.wavelet == WaveletKind::Cdf97;
      const WaveletCoeffs outer = outer_is_53 ? WaveletCoeffs::of(WaveletKind::LeGall53) : w;
      const Rounding outer_r = outer_is_53 ? Rounding::Floor : r;
      b.star_predict(outer, 0, outer_r);
      b.dwt2_diagonal(kG1, kG2, kConj, !kConj, w, r);
      b.star_update(outer, 0, outer_r, false);
      return b.finish({kG1, kG2, kB, kR});
    }
  }
  throw ConfigError("unknown transform family");
}

namespace {

template <typename Scalar>
WeightField stage_weights(const ChannelQuad<Scalar>& quad, const LiftingStage& stage, const EdgeParams& params) {
  for (int c : stage.weight_channels) {
    if (c == stage.target) throw ConfigError("weight source overlaps stage target");
  }
  if (stage.weighting == Weighting::Diagonal) {
    return weight_diag(quad[stage.weight_channels[0]], stage.diag_kind, params);
  }
  return weight_hv(quad[stage.weight_channels[0]], quad[stage.weight_channels[1]], stage.hv_kind, params);
}

template <typename Scalar>
void check_mode(const TransformSpec& spec) {
  if (spec.mode != mode_of<Scalar>) throw ConfigError("arithmetic type does not match transform mode");
}

}  // namespace

template <typename Scalar>
ForwardResult<Scalar> forward(const BayerMosaic& mosaic, const TransformSpec& spec) {
  check_mode<Scalar>(spec);
  const StagePlan plan = build_stages(spec);
  ChannelQuad<Scalar> quad = split_mosaic<Scalar>(mosaic);
  WeightLog log;
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    const LiftingStage& stage = plan.stages[i];
    if (stage.weighting == Weighting::None) {
      apply_stage(quad, stage);
    } else {
      log.push_back({i, stage_weights(quad, stage, spec.edge_params())});
      apply_stage(quad, stage, &log.back().field);
    }
  }
  ForwardResult<Scalar> out;
  out.subbands.bit_depth = mosaic.bit_depth();
  for (int s = 0; s < 4; ++s) out.subbands[s] = std::move(quad[plan.output[static_cast<std::size_t>(s)]]);
  out.weights = std::move(log);
  return out;
}

template <typename Scalar>
ChannelQuad<Scalar> inverse_channels(const SubbandQuad<Scalar>& subbands, const TransformSpec& spec,
                                     WeightLog* decoder_log) {
  check_mode<Scalar>(spec);
  check_same_dims(subbands);
  const StagePlan plan = build_stages(spec);
  ChannelQuad<Scalar> quad;
  quad.bit_depth = subbands.bit_depth;
  for (int s = 0; s < 4; ++s) quad[plan.output[static_cast<std::size_t>(s)]] = subbands[s];

  WeightLog log;
  for (std::size_t i = plan.stages.size(); i-- > 0;) {
    const LiftingStage& stage = plan.stages[i];
    if (stage.weighting == Weighting::None) {
      invert_stage(quad, stage);
    } else {
      WeightField field = stage_weights(quad, stage, spec.edge_params());
      invert_stage(quad, stage, &field);
      if (decoder_log) log.push_back({i, std::move(field)});
    }
  }
  if (decoder_log) *decoder_log = WeightLog(log.rbegin(), log.rend());
  return quad;
}

template ForwardResult<std::int32_t> forward<std::int32_t>(const BayerMosaic&, const TransformSpec&);
template ForwardResult<double> forward<double>(const BayerMosaic&, const TransformSpec&);
template ChannelQuad<std::int32_t> inverse_channels<std::int32_t>(const SubbandQuad<std::int32_t>&,
                                                                  const TransformSpec&, WeightLog*);
template ChannelQuad<double> inverse_channels<double>(const SubbandQuad<double>&, const TransformSpec&,
                                                      WeightLog*);

BayerMosaic inverse(const SubbandQuad<std::int32_t>& subbands, const TransformSpec& spec) {
  return merge_quad(inverse_channels(subbands, spec));
}

BayerMosaic inverse(const SubbandQuad<double>& subbands, const TransformSpec& spec, WeightLog* decoder_log) {
  return round_to_mosaic(inverse_channels(subbands, spec, decoder_log));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::WsstYDgCbCr: return "wsst-ydgcbcr";
    case Family::WsstYDgCoCg: return "wsst-ydgcocg";
    case Family::WsstYDgCoCg2: return "wsst-ydgcocg2";
    case Family::XsttI: return "xstt-i";
    case Family::XsttII: return "xstt-ii";
  }
  return "?";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::IntegerLossless ? "integer-lossless" : "real-lossy";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "integer-lossless" || name == "lossless") return Mode::IntegerLossless;
  if (name == "real-lossy" || name == "lossy") return Mode::RealLossy;
  return std::nullopt;
}

std::string describe(const TransformSpec& spec) {
  std::string s = spec.edge_aware ? "e" : "";
  s += to_string(spec.family);
  s += '/';
  s += to_string(spec.wavelet);
  return s;
}

}  // namespace sst
