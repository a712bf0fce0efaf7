#pragma once

#include <map>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/group_table.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

// All subgroups of a finite group, sorted by order and then by element set.
// Index 0 is the trivial subgroup, the last index the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice(const FiniteGroupTable& g, std::size_t cap = 200);

  const FiniteGroupTable& group() const { return group_; }
  int size() const { return static_cast<int>(subgroups_.size()); }
  int top() const { return size() - 1; }
  const ElementSet& subgroup(int i) const { return subgroups_[i]; }
  int order(int i) const { return static_cast<int>(subgroups_[i].count()); }
  int index_of(const ElementSet& h) const;  // -1 if absent
  bool contains(int big, int small) const { return subgroups_[small].is_subset_of(subgroups_[big]); }
  int meet(int a, int b) const { return index_of(subgroups_[a] & subgroups_[b]); }
  int join(int a, int b) const { return index_of(group_.join(subgroups_[a], subgroups_[b])); }
  // Small generating set of subgroup i (elements of the group).
  std::vector<int> generators(int i) const;

 private:
  FiniteGroupTable group_;
  std::vector<ElementSet> subgroups_;
  std::map<ElementSet, int> index_;
};

using MoebiusTable = std::vector<long>;  // mu(H, Gamma) by lattice index

// Top-down: mu(Gamma) = 1, mu(H) = -sum over K > H of mu(K).
MoebiusTable moebius(const SubgroupLattice& l);
// Chief-series formula; series[i] is Gamma_i as a subset of the group.
MoebiusTable moebius_kt(const SubgroupLattice& l, const std::vector<ElementSet>& chief);
// Chief series of the table itself, via chief_series.
MoebiusTable moebius_kt(const SubgroupLattice& l);
// Nilpotent groups only.
MoebiusTable moebius_weisner(const SubgroupLattice& l);

// sum over H of mu(H) |H|^n
count_t eulerian_via_moebius(const SubgroupLattice& l, const MoebiusTable& mu, int n);

struct HallIdentityReport {
  count_t hom = 0;           // |Hom(G, Gamma)|
  count_t sum_epi = 0;       // sum over H of |Epi(G, H)|
  count_t epi = 0;           // |Epi(G, Gamma)|
  long long moebius_sum = 0; // sum over H of mu(H) |Hom(G, H)|
  bool consistent() const { return hom == sum_epi && static_cast<long long>(epi) == moebius_sum; }
};
// Hom and Epi into every subgroup by lifting through its chief series.
HallIdentityReport hall_identities(const Presentation& p, const FiniteGroupTable& g, const CountOptions& opt = {});

// |Epi(G, D_2m)| = sum over l | m of (m/l) mu(m/l) sum over rho in Epi(G, Z_2)
// of |Z^1_{sigma rho}(G, Z_l)|, the sign action twisted through rho.
count_t dihedral_epi_via_moebius(const Presentation& p, int m);

// Number-theoretic Moebius function.
int moebius_number(long n);

}  // namespace solvcount
