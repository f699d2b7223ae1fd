#include "sst/cli/selftest.hpp"

#include <Eigen/Core>

#include "sst/cli/synth.hpp"
#include "sst/transforms.hpp"

namespace sst {

namespace {

std::vector<BayerMosaic> selftest_mosaics() {
  std::vector<BayerMosaic> out;
  const SynthParams sizes[] = {{8, 8, 8, 11}, {18, 12, 10, 12}, {32, 30, 14, 13}, {64, 64, 12, 14}};
  for (const SynthParams& p : sizes) out.push_back(synthesize(SynthKind::Noise, p));
  for (SynthKind k : {SynthKind::DiagEdge45, SynthKind::DiagEdge135, SynthKind::HStripes, SynthKind::Ramp}) {
    out.push_back(synthesize(k, {32, 32, 12, 1}));
  }
  return out;
}

bool same_subbands(const SubbandQuad<std::int32_t>& a, const SubbandQuad<std::int32_t>& b) {
  for (int k = 0; k < 4; ++k) {
    if (a[k].rows() != b[k].rows() || a[k].cols() != b[k].cols() || !(a[k] == b[k]).all()) return false;
  }
  return true;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  const std::vector<BayerMosaic> mosaics = selftest_mosaics();
  std::vector<SelftestCheck> checks;

  for (Family f : kAllFamilies) {
    for (WaveletKind w : kAllWavelets) {
      for (bool edge : {false, true}) {
        const TransformSpec spec = TransformSpec::make(f, w, edge);
        int bad = 0;
        for (const BayerMosaic& m : mosaics) {
          if (!(inverse(forward<std::int32_t>(m, spec).subbands, spec) == m)) ++bad;
        }
        checks.push_back({"round-trip " + describe(spec), bad == 0,
                          bad ? std::to_string(bad) + " mosaics differ" : std::string()});
      }
    }
  }

  {
    const TransformSpec spec = TransformSpec::make(Family::XsttI, WaveletKind::LeGall53, false);
    int bad = 0;
    for (const BayerMosaic& m : mosaics) {
      if (!same_subbands(forward<std::int32_t>(m, spec).subbands, stt_forward_direct(m))) ++bad;
    }
    checks.push_back({"star-tetrix equivalence", bad == 0, bad ? std::to_string(bad) + " mosaics differ" : ""});
  }

  {
    Eigen::Matrix4d expected;
    expected << 0.25, 0.25, 0.25, 0.25,  //
        -1, 1, 0, 0,                     //
        -0.5, -0.5, 1, 0,                //
        -0.5, -0.5, 0, 1;
    for (Family f : {Family::XsttI, Family::XsttII, Family::WsstYDgCbCr}) {
      const TransformSpec spec = TransformSpec::make(f, WaveletKind::Haar, false);
      const double err = (dc_matrix(build_stages(spec)) - expected).cwiseAbs().maxCoeff();
      checks.push_back({"haar dc matrix " + std::string(to_string(f)), err <= 1e-12,
                        "max error " + std::to_string(err)});
    }
  }

  for (Family f : kAllFamilies) {
    for (WaveletKind w : kAllWavelets) {
      const TransformSpec plain = TransformSpec::make(f, w, false);
      TransformSpec neutral = TransformSpec::make(f, w, true);
      neutral.gamma = 0.0;
      int bad = 0;
      for (const BayerMosaic& m : mosaics) {
        if (!same_subbands(forward<std::int32_t>(m, plain).subbands, forward<std::int32_t>(m, neutral).subbands)) {
          ++bad;
        }
      }
      checks.push_back({"gamma=0 neutrality " + describe(neutral), bad == 0,
                        bad ? std::to_string(bad) + " mosaics differ" : ""});
    }
  }
  return checks;
}

}  // namespace sst
