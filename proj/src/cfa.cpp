#include "sst/cfa.hpp"

#include <cmath>
#include <string>

namespace sst {

namespace {

// Mosaic offsets (row, col) of each channel inside its macropixel.
constexpr std::array<std::array<int, 2>, 4> kChannelOffset = {{
    {1, 0},  // G1
    {0, 1},  // G2
    {1, 1},  // B
    {0, 0},  // R
}};

template <typename Scalar, typename Sample>
void scatter(const ChannelQuad<Scalar>& q, SamplePlane& out, Sample&& to_sample) {
  for (int c = 0; c < 4; ++c) {
    const auto [dy, dx] = kChannelOffset[static_cast<std::size_t>(c)];
    const auto& p = q[c];
    for (Index i = 0; i < p.rows(); ++i) {
      for (Index j = 0; j < p.cols(); ++j) out(2 * i + dy, 2 * j + dx) = to_sample(p(i, j));
    }
  }
}

}  // namespace

BayerMosaic::BayerMosaic(SamplePlane samples, int bit_depth, CfaPhase phase)
    : samples_(std::move(samples)), bit_depth_(bit_depth), phase_(phase) {
  if (samples_.rows() == 0 || samples_.cols() == 0) throw DimensionError("empty mosaic");
  if (samples_.rows() % 2 != 0 || samples_.cols() % 2 != 0) {
    throw DimensionError("mosaic dimensions must be even, got " + std::to_string(samples_.cols()) +
                         "x" + std::to_string(samples_.rows()));
  }
  if (bit_depth_ < 8 || bit_depth_ > 16) {
    throw ConfigError("bit depth must be in [8, 16], got " + std::to_string(bit_depth_));
  }
  if (bit_depth_ < 16 && samples_.maxCoeff() > max_value()) {
    throw RangeError("sample exceeds 2^" + std::to_string(bit_depth_) + " - 1");
  }
}

template <typename Scalar>
ChannelQuad<Scalar> split_mosaic(const BayerMosaic& m) {
  const Index rows = m.height() / 2;
  const Index cols = m.width() / 2;
  ChannelQuad<Scalar> q;
  q.bit_depth = m.bit_depth();
  for (int c = 0; c < 4; ++c) {
    const auto [dy, dx] = kChannelOffset[static_cast<std::size_t>(c)];
    q[c] = m.samples()(Eigen::seqN(dy, rows, 2), Eigen::seqN(dx, cols, 2)).template cast<Scalar>();
  }
  return q;
}

template ChannelQuad<std::int32_t> split_mosaic<std::int32_t>(const BayerMosaic&);
template ChannelQuad<double> split_mosaic<double>(const BayerMosaic&);

BayerMosaic merge_quad(const ChannelQuad<std::int32_t>& q) {
  check_same_dims(q);
  if (q.bit_depth < 8 || q.bit_depth > 16) throw ConfigError("quad has no valid bit depth");
  const std::int32_t limit = static_cast<std::int32_t>(1u << q.bit_depth);
  for (int c = 0; c < 4; ++c) {
    if (q[c].minCoeff() < 0 || q[c].maxCoeff() >= limit) {
      throw RangeError("channel " + std::to_string(c) + " has samples outside [0, 2^" +
                       std::to_string(q.bit_depth) + ")");
    }
  }
  SamplePlane out(2 * q.rows(), 2 * q.cols());
  scatter(q, out, [](std::int32_t v) { return static_cast<std::uint16_t>(v); });
  return BayerMosaic(std::move(out), q.bit_depth);
}

BayerMosaic round_to_mosaic(const ChannelQuad<double>& q) {
  check_same_dims(q);
  if (q.bit_depth < 8 || q.bit_depth > 16) throw ConfigError("quad has no valid bit depth");
  const double hi = static_cast<double>((1u << q.bit_depth) - 1u);
  SamplePlane out(2 * q.rows(), 2 * q.cols());
  scatter(q, out, [hi](double v) {
    const double r = std::nearbyint(v);
    return static_cast<std::uint16_t>(r < 0.0 ? 0.0 : (r > hi ? hi : r));
  });
  return BayerMosaic(std::move(out), q.bit_depth);
}

}  // namespace sst
