#pragma once

// Whole-sample symmetric extension on the macropixel grid: index -1 maps to 1,
// index n maps to n-2, the edge sample itself is not repeated.

#include "sst/cfa.hpp"

namespace sst {

constexpr Index reflect_index(Index i, Index n) {
  if (n == 1) return 0;
  const Index period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

/// plane(y + dy, x + dx) with symmetric extension; x is the column.
template <typename Derived>
typename Derived::Scalar shifted_sample(const Eigen::ArrayBase<Derived>& plane, Index x, Index y,
                                        Index dx, Index dy) {
  return plane(reflect_index(y + dy, plane.rows()), reflect_index(x + dx, plane.cols()));
}

/// Copy of `plane` with `margin` reflected samples on every side.
template <typename Derived>
Plane<typename Derived::Scalar> pad_symmetric(const Eigen::ArrayBase<Derived>& plane, Index margin) {
  const Index rows = plane.rows();
  const Index cols = plane.cols();
  Plane<typename Derived::Scalar> out(rows + 2 * margin, cols + 2 * margin);
  for (Index i = 0; i < out.rows(); ++i) {
    const Index si = reflect_index(i - margin, rows);
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = plane(si, reflect_index(j - margin, cols));
  }
  return out;
}

}  // namespace sst
