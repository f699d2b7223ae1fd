#include "sst/rate_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sst {

double dg_improvement_percent(double edge_aware_energy, double plain_energy) {
  if (plain_energy == 0.0) return edge_aware_energy == 0.0 ? 0.0 : HUGE_VAL;
  return 100.0 * (edge_aware_energy - plain_energy) / plain_energy;
}

double entropy_bpp(const IntPlane& plane) {
  if (plane.size() == 0) return 0.0;
  std::map<std::int32_t, std::int64_t> histogram;
  for (Index i = 0; i < plane.size(); ++i) ++histogram[plane.data()[i]];
  const double n = static_cast<double>(plane.size());
  double h = 0.0;
  for (const auto& [value, count] : histogram) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no -0
}

IntPlane quantize(const RealPlane& plane, double step) {
  if (!(step > 0.0)) throw ConfigError("quantizer step must be positive");
  return plane.unaryExpr([step](double x) {
    const double q = std::floor(std::abs(x) / step);
    return static_cast<std::int32_t>(x < 0.0 ? -q : q);
  });
}

RealPlane dequantize(const IntPlane& indices, double step) {
  if (!(step > 0.0)) throw ConfigError("quantizer step must be positive");
  return indices.unaryExpr([step](std::int32_t q) {
    if (q == 0) return 0.0;
    const double mag = (std::abs(static_cast<double>(q)) + 0.5) * step;
    return q < 0 ? -mag : mag;
  });
}

RateReport rate_report(const SubbandQuad<std::int32_t>& s) {
  RateReport r;
  for (int b = 0; b < 4; ++b) r.entropy[static_cast<std::size_t>(b)] = entropy_bpp(s[b]);
  r.bpp = (r.entropy[0] + r.entropy[1] + r.entropy[2] + r.entropy[3]) / 4.0;
  r.dg_energy = dg_energy(s);
  return r;
}

double psnr(const BayerMosaic& reference, const BayerMosaic& test) {
  if (reference.width() != test.width() || reference.height() != test.height()) {
    throw DimensionError("PSNR of differently sized mosaics");
  }
  const double mse =
      (reference.samples().cast<double>() - test.samples().cast<double>()).square().mean();
  if (mse == 0.0) return kPsnrCap;
  const double peak = static_cast<double>(reference.max_value());
  return std::min(kPsnrCap, 10.0 * std::log10(peak * peak / mse));
}

double weight_divergence(const WeightLog& encoder, const WeightLog& decoder) {
  if (encoder.size() != decoder.size()) throw ConfigError("weight logs have different stage counts");
  double total = 0.0;
  double count = 0.0;
  for (std::size_t i = 0; i < encoder.size(); ++i) {
    const auto& e = encoder[i];
    const auto& d = decoder[i];
    if (e.stage != d.stage) throw ConfigError("weight logs describe different stages");
    if (e.field.fraction.rows() != d.field.fraction.rows() || e.field.fraction.cols() != d.field.fraction.cols()) {
      throw DimensionError("weight fields differ in size");
    }
    total += (e.field.fraction - d.field.fraction).abs().sum();
    count += static_cast<double>(e.field.fraction.size());
  }
  return count == 0.0 ? 0.0 : total / count;
}

std::vector<RateReport> rd_sweep(const BayerMosaic& mosaic, const TransformSpec& spec,
                                 std::span<const double> steps) {
  if (spec.mode != Mode::RealLossy) throw ConfigError("rd_sweep needs a real-lossy transform");
  const ForwardResult<double> fwd = forward<double>(mosaic, spec);
  const double energy = dg_energy(fwd.subbands);

  std::vector<RateReport> reports;
  reports.reserve(steps.size());
  for (double step : steps) {
    RateReport r;
    r.quant_step = step;
    r.dg_energy = energy;
    SubbandQuad<double> decoded;
    decoded.bit_depth = fwd.subbands.bit_depth;
    for (int b = 0; b < 4; ++b) {
      const IntPlane q = quantize(fwd.subbands[b], step);
      r.entropy[static_cast<std::size_t>(b)] = entropy_bpp(q);
      decoded[b] = dequantize(q, step);
    }
    r.bpp = (r.entropy[0] + r.entropy[1] + r.entropy[2] + r.entropy[3]) / 4.0;
    WeightLog decoder_log;
    const BayerMosaic rec = inverse(decoded, spec, &decoder_log);
    r.psnr = psnr(mosaic, rec);
    r.weight_divergence = weight_divergence(fwd.weights, decoder_log);
    reports.push_back(r);
  }
  return reports;
}

}  // namespace sst
