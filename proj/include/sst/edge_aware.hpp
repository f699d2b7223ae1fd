#pragma once

// Edge-aware weights for the 2-D predict steps. A weight W_m is the sum of
// |directional difference|^gamma over a 3x3 neighbourhood of delays Z_n plus
// epsilon; the prediction leans toward the tap pair whose orthogonal
// direction varies the most, i.e. along the edge.
//
// Weights are never transmitted. They are pure functions of the predictor
// source planes, evaluated in binary64 with a fixed summation order, so a
// lossless decoder recomputes them bit for bit.

#include <array>

#include "sst/cfa.hpp"
#include "sst/stencil.hpp"

namespace sst {

struct EdgeParams {
  double gamma = 1.0;
  double epsilon = 1e-8;

  static EdgeParams for_mode(Mode mode) {
    return {mode == Mode::IntegerLossless ? 1.0 : 0.5, 1e-8};
  }
};

/// Per-pixel weights of one edge-aware predict stage.
struct WeightField {
  RealPlane w1;
  RealPlane w2;
  RealPlane fraction;  ///< w1 / (w1 + w2)

  WeightField() = default;
  WeightField(RealPlane w1_in, RealPlane w2_in);

  double share(WeightGroup g, Index row, Index col) const {
    switch (g) {
      case WeightGroup::W1: return fraction(row, col);
      case WeightGroup::W2: return w2(row, col) / (w1(row, col) + w2(row, col));
      case WeightGroup::None: break;
    }
    return 1.0;
  }
};

/// Orientation of a 2-D diagonal predict.
enum class DiagKind {
  G1ToG2,  ///< P(z̄1, z2): W1 pairs {1, z1 z̄2}, W2 pairs {z1, z̄2}
  BToR,    ///< P(z̄1, z̄2): W1 pairs {1, z1 z2}, W2 pairs {z1, z2}
};

/// Target of a 2-D horizontal-vertical (G1, G2) predict.
enum class HvKind { ToR, ToB };

/// Delays Z_0..Z_8 as (dy, dx) offsets: center, z2, z1, z̄1, z̄2, z1z2, z̄1z2,
/// z1z̄2, z̄1z̄2.
inline constexpr std::array<std::array<int, 2>, 9> kNeighbourhood = {{
    {0, 0}, {0, -1}, {-1, 0}, {1, 0}, {0, 1}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1},
}};

template <typename Scalar>
WeightField weight_diag(const Plane<Scalar>& source, DiagKind kind, const EdgeParams& params);

/// Throws DimensionError if g1 and g2 differ in size.
template <typename Scalar>
WeightField weight_hv(const Plane<Scalar>& g1, const Plane<Scalar>& g2, HvKind kind,
                      const EdgeParams& params);

/// Four-tap weighted diagonal predictor at one pixel. Tap order matches the
/// unweighted polynomial: center, row-delay term, column-delay term, product
/// term.
Stencil weighted_diag_stencil(double p, const WeightField& field, Index row, Index col, DiagKind kind);

/// Two-tap weighted predictor along `axis` (1 = rows, 2 = columns):
/// W_axis/(W1+W2) (1 + z̄_axis) p, or (1 + z_axis) p when `conjugate`.
Stencil weighted_hv_stencil(double p, const WeightField& field, Index row, Index col, int axis,
                            bool conjugate);

}  // namespace sst
