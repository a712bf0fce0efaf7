#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "solvcount/group_table.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

struct BuiltinGroup {
  std::string name;
  FiniteGroupTable concrete;
  ExtensionTower tower;
  std::vector<int> to_tower;  // concrete element -> tower element
};

// Concrete tables. Dihedral: a^u b^v has index u + m v. Binary dihedral of
// order 4m: a^u b^v has index u + 2m v with b^2 = a^m. Metacyclic Z_s x| Z_r
// with x z x^-1 = z^u: z^a x^j has index a + s j.
FiniteGroupTable dihedral_table(int m);
FiniteGroupTable binary_dihedral_table(int m);
FiniteGroupTable metacyclic_table(int s, int r, int u);

// Group-spec DSL: Z(n), Z(n)^k, D(n), Dstar(n), Q(n), S(3), S(4), A(4),
// M(s,r,u), V(q,p,r), and products with '*'. Case-insensitive.
BuiltinGroup builtin_group_full(std::string_view spec, std::size_t cap = 512);
ExtensionTower builtin_group(std::string_view spec, std::size_t cap = 512);

// Group DSL, or a multiplication-table file given as "table:PATH" or an
// existing path; tables are routed through chief_series.
BuiltinGroup resolve_group(std::string_view spec, std::size_t cap = 512);

// Specs of the solvable groups used for catalog-wide checks, by ascending order.
std::vector<std::string> catalog_specs(int max_order);

}  // namespace solvcount
