#include "sst/edge_aware.hpp"

#include <cmath>
#include <cstdint>

#include "sst/boundary.hpp"

namespace sst {

namespace {

struct Difference {
  std::array<int, 2> a;  // source(a) - source(b)
  std::array<int, 2> b;
};

constexpr Index kMargin = 2;

// Sum over the listed Z_n of |source(p + Z_n + a) - source(p + Z_n + b)|^gamma,
// plus epsilon. `padded` carries kMargin reflected samples on each side.
RealPlane directional_weight(const RealPlane& padded, Index rows, Index cols, Difference d,
                             std::uint16_t position_mask, const EdgeParams& params) {
  RealPlane w(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      double sum = 0.0;
      for (std::size_t n = 0; n < kNeighbourhood.size(); ++n) {
        if (!(position_mask & (1u << n))) continue;
        const Index ci = i + kMargin + kNeighbourhood[n][0];
        const Index cj = j + kMargin + kNeighbourhood[n][1];
        const double diff = padded(ci + d.a[0], cj + d.a[1]) - padded(ci + d.b[0], cj + d.b[1]);
        sum += std::pow(std::abs(diff), params.gamma);
      }
      w(i, j) = sum + params.epsilon;
    }
  }
  return w;
}

constexpr std::uint16_t kAllPositions = 0x1FF;
// Differences along rows skip Z = z1, z̄1 (n = 2, 3); along columns skip
// Z = z2, z̄2 (n = 1, 4).
constexpr std::uint16_t kSkipRowShifts = kAllPositions & ~((1u << 2) | (1u << 3));
constexpr std::uint16_t kSkipColShifts = kAllPositions & ~((1u << 1) | (1u << 4));

template <typename Scalar>
RealPlane padded_real(const Plane<Scalar>& p) {
  return pad_symmetric(p.template cast<double>(), kMargin);
}

}  // namespace

WeightField::WeightField(RealPlane w1_in, RealPlane w2_in) : w1(std::move(w1_in)), w2(std::move(w2_in)) {
  if (w1.rows() != w2.rows() || w1.cols() != w2.cols()) throw DimensionError("weight planes differ in size");
  fraction = w1 / (w1 + w2);
}

template <typename Scalar>
WeightField weight_diag(const Plane<Scalar>& source, DiagKind kind, const EdgeParams& params) {
  const RealPlane padded = padded_real(source);
  Difference d1{};
  Difference d2{};
  if (kind == DiagKind::G1ToG2) {
    d1 = {{-1, 0}, {0, 1}};   // (z1 - z̄2)
    d2 = {{0, 0}, {-1, 1}};   // (1 - z1 z̄2)
  } else {
    d1 = {{-1, 0}, {0, -1}};  // (z1 - z2)
    d2 = {{0, 0}, {-1, -1}};  // (1 - z1 z2)
  }
  return WeightField(directional_weight(padded, source.rows(), source.cols(), d1, kAllPositions, params),
                     directional_weight(padded, source.rows(), source.cols(), d2, kAllPositions, params));
}

template <typename Scalar>
WeightField weight_hv(const Plane<Scalar>& g1, const Plane<Scalar>& g2, HvKind kind,
                      const EdgeParams& params) {
  if (g1.rows() != g2.rows() || g1.cols() != g2.cols()) throw DimensionError("green planes differ in size");
  const RealPlane p1 = padded_real(g1);
  const RealPlane p2 = padded_real(g2);
  const Index rows = g1.rows();
  const Index cols = g1.cols();
  // W1 comes from column differences, W2 from row differences.
  if (kind == HvKind::ToR) {
    return WeightField(directional_weight(p2, rows, cols, {{0, 0}, {0, -1}}, kSkipColShifts, params),
                       directional_weight(p1, rows, cols, {{0, 0}, {-1, 0}}, kSkipRowShifts, params));
  }
  return WeightField(directional_weight(p1, rows, cols, {{0, 0}, {0, 1}}, kSkipColShifts, params),
                     directional_weight(p2, rows, cols, {{0, 0}, {1, 0}}, kSkipRowShifts, params));
}

template WeightField weight_diag<std::int32_t>(const IntPlane&, DiagKind, const EdgeParams&);
template WeightField weight_diag<double>(const RealPlane&, DiagKind, const EdgeParams&);
template WeightField weight_hv<std::int32_t>(const IntPlane&, const IntPlane&, HvKind, const EdgeParams&);
template WeightField weight_hv<double>(const RealPlane&, const RealPlane&, HvKind, const EdgeParams&);

Stencil weighted_diag_stencil(double p, const WeightField& field, Index row, Index col, DiagKind kind) {
  const double a = p * field.share(WeightGroup::W1, row, col);
  const double b = p * field.share(WeightGroup::W2, row, col);
  const int dx = kind == DiagKind::G1ToG2 ? 1 : -1;
  return {{
      {0, 0, a, WeightGroup::W1},
      {-1, 0, b, WeightGroup::W2},
      {0, dx, b, WeightGroup::W2},
      {-1, dx, a, WeightGroup::W1},
  }};
}

Stencil weighted_hv_stencil(double p, const WeightField& field, Index row, Index col, int axis,
                            bool conjugate) {
  const WeightGroup g = axis == 1 ? WeightGroup::W1 : WeightGroup::W2;
  const double w = p * field.share(g, row, col);
  const int step = conjugate ? -1 : 1;
  return {{
      {0, 0, w, g},
      {axis == 1 ? step : 0, axis == 2 ? step : 0, w, g},
  }};
}

}  // namespace sst
