#include "solvcount/modlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace solvcount {

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quo = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
  }
  if (old_r != 1) throw std::logic_error("mod_inverse of a non-unit");
  return mod_reduce(old_s, m);
}

int valuation(std::int64_t x, std::int64_t q, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (v < cap && x % q == 0) {
    x /= q;
    ++v;
  }
  return v;
}

ModSolution solve_mod_prime_power(IntMatrix m, IntVector rhs, std::int64_t q, int r) {
  std::int64_t mod = 1;
  for (int i = 0; i < r; ++i) mod *= q;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (rhs.size() == 0) rhs = IntVector::Zero(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    rhs(i) = mod_reduce(rhs(i), mod);
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = mod_reduce(m(i, j), mod);
  }
  IntMatrix transform = IntMatrix::Identity(cols, cols);  // x = transform * y
  std::vector<int> pivot_val;
  Eigen::Index t = 0;
  for (; t < rows && t < cols; ++t) {
    Eigen::Index pr = -1, pc = -1;
    int best = r;
    for (Eigen::Index i = t; i < rows && best > 0; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        int v = valuation(m(i, j), q, r);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    if (pr < 0) break;
    detail::swap_rows(m, t, pr);
    std::swap(rhs(t), rhs(pr));
    detail::swap_cols(m, t, pc);
    detail::swap_cols(transform, t, pc);
    std::int64_t qv = 1;
    for (int i = 0; i < best; ++i) qv *= q;
    std::int64_t unit_inv = mod_inverse(m(t, t) / qv, mod);
    // Normalize the pivot row to q^v.
    for (Eigen::Index j = t; j < cols; ++j) m(t, j) = mod_reduce(m(t, j) * unit_inv, mod);
    rhs(t) = mod_reduce(rhs(t) * unit_inv, mod);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == t || m(i, t) == 0) continue;
      std::int64_t f = m(i, t) / qv;
      for (Eigen::Index j = t; j < cols; ++j) m(i, j) = mod_reduce(m(i, j) - f * m(t, j), mod);
      rhs(i) = mod_reduce(rhs(i) - f * rhs(t), mod);
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      std::int64_t f = m(t, j) / qv;
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = mod_reduce(m(i, j) - f * m(i, t), mod);
      for (Eigen::Index i = 0; i < cols; ++i)
        transform(i, j) = mod_reduce(transform(i, j) - f * transform(i, t), mod);
    }
    pivot_val.push_back(best);
  }
  const Eigen::Index rank = t;

  ModSolution out;
  out.q = q;
  out.r = r;
  IntVector y = IntVector::Zero(cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (i < rank) {
      std::int64_t qv = 1;
      for (int k = 0; k < pivot_val[i]; ++k) qv *= q;
      if (rhs(i) % qv != 0) out.solvable = false;
      else y(i) = rhs(i) / qv;
    } else if (rhs(i) != 0) {
      out.solvable = false;
    }
  }
  if (out.solvable) {
    out.witness = IntVector::Zero(cols);
    for (Eigen::Index i = 0; i < cols; ++i) {
      std::int64_t acc = 0;
      for (Eigen::Index j = 0; j < cols; ++j) acc = mod_reduce(acc + transform(i, j) * y(j), mod);
      out.witness(i) = acc;
    }
  }
  for (Eigen::Index j = 0; j < cols; ++j) {
    int e = j < rank ? pivot_val[j] : r;
    if (e == 0) continue;
    std::int64_t scale = 1;
    for (int k = 0; k < r - e; ++k) scale *= q;
    IntVector g(cols);
    for (Eigen::Index i = 0; i < cols; ++i) g(i) = mod_reduce(transform(i, j) * scale, mod);
    out.kernel_gens.push_back(std::move(g));
    out.kernel_exps.push_back(e);
    out.log_count += e;
  }
  return out;
}

int rank_mod_prime(const IntMatrix& m, std::int64_t q) {
  ModSolution s = solve_mod_prime_power(m, IntVector(), q, 1);
  return static_cast<int>(m.cols()) - s.log_count;
}

}  // namespace solvcount
