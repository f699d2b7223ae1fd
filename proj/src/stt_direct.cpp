// Star-Tetrix transform written out on the full-resolution mosaic. Shares no
// code with the lifting engine; neighbours outside the image are taken from
// the reflected macropixel, matching the engine's boundary convention.

#include <vector>

#include "sst/boundary.hpp"
#include "sst/transforms.hpp"

namespace sst {

namespace {

class MosaicGrid {
 public:
  explicit MosaicGrid(const BayerMosaic& m) : h_(m.height()), w_(m.width()), v_(m.samples().cast<std::int32_t>()) {}

  std::int32_t& at(Index y, Index x) { return v_(fold(y, h_), fold(x, w_)); }

  Index height() const { return h_; }
  Index width() const { return w_; }

 private:
  // Reflect the macropixel index, keep the position inside the macropixel.
  static Index fold(Index p, Index n) {
    const Index cell = p >= 0 ? p / 2 : -((-p + 1) / 2);
    const Index phase = p - 2 * cell;
    return 2 * reflect_index(cell, n / 2) + phase;
  }

  Index h_;
  Index w_;
  IntPlane v_;
};

bool is_red(Index y, Index x) { return y % 2 == 0 && x % 2 == 0; }
bool is_blue(Index y, Index x) { return y % 2 == 1 && x % 2 == 1; }
bool is_red_row_green(Index y, Index x) { return y % 2 == 0 && x % 2 == 1; }
bool is_blue_row_green(Index y, Index x) { return y % 2 == 1 && x % 2 == 0; }

}  // namespace

SubbandQuad<std::int32_t> stt_forward_direct(const BayerMosaic& mosaic) {
  MosaicGrid g(mosaic);
  const Index h = g.height();
  const Index w = g.width();

  // Each step reads only samples the step does not write, so in-place
  // updates are safe.
  // Cb = B - floor((Gl + Gr + Gt + Gb) / 4), Cr likewise.
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      if (!is_red(y, x) && !is_blue(y, x)) continue;
      g.at(y, x) -= (g.at(y, x - 1) + g.at(y, x + 1) + g.at(y - 1, x) + g.at(y + 1, x)) >> 2;
    }
  }
  // Y1 = G + floor((Cr_l + Cr_r + Cb_t + Cb_b) / 8) on red rows,
  // Y2 = G + floor((Cr_t + Cr_b + Cb_l + Cb_r) / 8) on blue rows.
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      if (is_red(y, x) || is_blue(y, x)) continue;
      g.at(y, x) += (g.at(y, x - 1) + g.at(y, x + 1) + g.at(y - 1, x) + g.at(y + 1, x)) >> 3;
    }
  }
  // Delta = Y1 - floor(sum of the four diagonal Y2 / 4).
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      if (!is_red_row_green(y, x)) continue;
      g.at(y, x) -= (g.at(y - 1, x - 1) + g.at(y - 1, x + 1) + g.at(y + 1, x - 1) + g.at(y + 1, x + 1)) >> 2;
    }
  }
  // Y = Y2 + floor(sum of the four diagonal Delta / 8).
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      if (!is_blue_row_green(y, x)) continue;
      g.at(y, x) += (g.at(y - 1, x - 1) + g.at(y - 1, x + 1) + g.at(y + 1, x - 1) + g.at(y + 1, x + 1)) >> 3;
    }
  }

  SubbandQuad<std::int32_t> out;
  out.bit_depth = mosaic.bit_depth();
  const Index rows = h / 2;
  const Index cols = w / 2;
  for (auto& p : out.planes) p.resize(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out[kY](i, j) = g.at(2 * i + 1, 2 * j);
      out[kDg](i, j) = g.at(2 * i, 2 * j + 1);
      out[kC1](i, j) = g.at(2 * i + 1, 2 * j + 1);
      out[kC2](i, j) = g.at(2 * i, 2 * j);
    }
  }
  return out;
}

}  // namespace sst
