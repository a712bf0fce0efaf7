#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace solvcount {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Euclidean remainder with a nonnegative result for positive divisors.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
void swap_rows(DenseMatrix<Scalar>& m, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

template <typename Scalar>
void swap_cols(DenseMatrix<Scalar>& m, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace detail

// Diagonal of the Smith normal form over Z. Returns the nonzero invariant
// factors d_1 | d_2 | ... (positive); the rank is the length of the result.
// Pivots on the smallest nonzero entry in absolute value. Only element access
// is used so that multiprecision scalars work.
template <typename Scalar>
std::vector<Scalar> smith_invariants(DenseMatrix<Scalar> m) {
  using detail::abs_value;
  std::vector<Scalar> diag;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr < 0 || abs_value(m(r, c)) < best)) {
          best = abs_value(m(r, c));
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    detail::swap_rows(m, t, pr);
    detail::swap_cols(m, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Scalar f = detail::floor_div<Scalar>(m(r, t), m(t, t));
        for (Eigen::Index c = t; c < cols; ++c) m(r, c) -= f * m(t, c);
        if (m(r, t) != 0) {
          detail::swap_rows(m, t, r);
          clean = false;
        }
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Scalar f = detail::floor_div<Scalar>(m(t, c), m(t, t));
        for (Eigen::Index r = t; r < rows; ++r) m(r, c) -= f * m(r, t);
        if (m(t, c) != 0) {
          detail::swap_cols(m, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (Eigen::Index r = t + 1; r < rows && clean; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            for (Eigen::Index k = t; k < cols; ++k) m(t, k) += m(r, k);
            clean = false;
            break;
          }
    }
    diag.push_back(abs_value(m(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace solvcount
