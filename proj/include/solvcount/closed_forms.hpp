#pragma once

#include <string_view>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

// Eulerian-type closed forms:
//   dihedral(m), binary_dihedral(m)   |Epi(F_n, D_2m)|, |Epi(F_n, Dstar_4m)|
//   surface(g, m), nonorientable(g, m) |Epi(Pi_g, D_2m)|, |Epi(Pi*_g, D_2m)|; n unused
count_t closed_form_eulerian(std::string_view family, const std::vector<long>& params, int n);

// Hall-invariant case tables:
//   bs_d8(m,n), bs_q8(m,n), parafree_s4(m,n),
//   braid_metabelian(type, r, k) for Z_r x| Z_k (types 1, 2) or Z_r^2 x| Z_k (types 3, 4),
//   braid_solvable(n, cyclic) for n >= 5.
count_t closed_form_delta(std::string_view family, const std::vector<long>& params);

// <a, b | a^d, b^2 = a^t, b a b^-1 = a^-1> with a^u b^v at index u + d v.
FiniteGroupTable cyclic_by_two_table(int d, int t);
// Layer Z_q = <a^l> of cyclic_by_two_table(q l, t_big) over cyclic_by_two_table(l, t_big mod l):
// sigma = (-1)^v, and chi(a^u b^v, a^s b^w) = k where the product in the
// larger quotient has cyclic exponent l k + r, 0 <= r < l.
ElementaryLayer cyclic_by_two_layer(int l, int q, int t_big);

// |Epi(G, D_2m)| and |Epi(G, Dstar_4m)| by the prime-by-prime recursions,
// using closed-form cocycles on the quotients by <a^d>. Each level asserts the
// recursion value against direct enumeration of surjective lifts.
count_t epi_count_dihedral_recursion(const Presentation& p, int m, const CountOptions& opt = {});
count_t epi_count_binary_dihedral_recursion(const Presentation& p, int m, const CountOptions& opt = {});

}  // namespace solvcount
