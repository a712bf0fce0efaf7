#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "solvcount/smith.hpp"

namespace solvcount {

using IntMatrix = DenseMatrix<std::int64_t>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

std::int64_t mod_reduce(std::int64_t x, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);  // a must be a unit
int valuation(std::int64_t x, std::int64_t q, int cap);     // q-adic valuation, capped

// Solution set of M x = rhs over Z_{q^r}: |ker| = q^log_count, a witness with
// free variables set to zero when solvable, and generators of the kernel
// (kernel_gens[i] has additive order q^kernel_exps[i]; every kernel element is
// a unique combination sum c_i g_i with 0 <= c_i < q^kernel_exps[i]).
struct ModSolution {
  std::int64_t q = 2;
  int r = 1;
  int log_count = 0;
  bool solvable = true;
  IntVector witness;
  std::vector<IntVector> kernel_gens;
  std::vector<int> kernel_exps;
};

// Diagonalizes by pivoting on entries of minimal q-valuation. rhs may be empty
// (treated as zero).
ModSolution solve_mod_prime_power(IntMatrix m, IntVector rhs, std::int64_t q, int r);

// Rank of a matrix over the field Z_q.
int rank_mod_prime(const IntMatrix& m, std::int64_t q);

}  // namespace solvcount
