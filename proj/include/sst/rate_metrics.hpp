#pragma once

// Desk-scale rate/distortion harness. Rates are zeroth-order entropies of
// subband samples (or quantizer indices), not output of a real entropy
// coder; compare them only against each other. PSNR is measured on the raw
// mosaic.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sst/cfa.hpp"
#include "sst/transforms.hpp"

namespace sst {

/// Reported instead of +inf when a reconstruction is exact.
inline constexpr double kPsnrCap = 200.0;

struct RateReport {
  std::array<double, 4> entropy{};  ///< bits/sample of Y, Dg, C1, C2
  double bpp = 0.0;                 ///< mean of the four entropies
  double dg_energy = 0.0;
  std::optional<double> psnr;
  std::optional<double> quant_step;
  std::optional<double> weight_divergence;
};

/// Mean of squared Dg samples.
template <typename Scalar>
double dg_energy(const SubbandQuad<Scalar>& s) {
  return s.dg().template cast<double>().square().mean();
}

/// 100 (E_edge - E_plain) / E_plain; negative means the edge-aware transform
/// left less Dg energy. 0 when both energies are 0.
double dg_improvement_percent(double edge_aware_energy, double plain_energy);

/// Zeroth-order empirical entropy of the value histogram, in bits/sample.
double entropy_bpp(const IntPlane& plane);

/// Dead-zone uniform quantizer: sign(x) floor(|x| / step). ConfigError if
/// step <= 0.
IntPlane quantize(const RealPlane& plane, double step);

/// Mid-point reconstruction sign(q) (|q| + 1/2) step; 0 stays 0.
RealPlane dequantize(const IntPlane& indices, double step);

/// Entropies and Dg energy of integer subbands.
RateReport rate_report(const SubbandQuad<std::int32_t>& s);

/// PSNR over all mosaic samples with peak 2^bit_depth - 1, capped at kPsnrCap.
double psnr(const BayerMosaic& reference, const BayerMosaic& test);

/// Mean |encoder fraction - decoder fraction| over every weighted stage and
/// pixel. ConfigError if the logs describe different stages.
double weight_divergence(const WeightLog& encoder, const WeightLog& decoder);

/// For each step: real-mode forward, quantize every subband, dequantize,
/// inverse with decoder-side weights, measure PSNR and index entropy.
std::vector<RateReport> rd_sweep(const BayerMosaic& mosaic, const TransformSpec& spec,
                                 std::span<const double> steps);

}  // namespace sst
