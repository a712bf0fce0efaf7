#include "solvcount/lattice.hpp"

#include <algorithm>
#include <string>

#include "solvcount/cohomology.hpp"

namespace solvcount {

SubgroupLattice::SubgroupLattice(const FiniteGroupTable& g, std::size_t cap) : group_(g) {
  const int n = g.order();
  if (static_cast<std::size_t>(n) > cap)
    throw CapExceeded("subgroup lattice: group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<ElementSet> cyclic;
  std::map<ElementSet, int> seen;
  for (int x = 0; x < n; ++x) {
    ElementSet c = g.closure(std::span<const int>(&x, 1));
    if (seen.emplace(c, 0).second) cyclic.push_back(c);
  }
  // Every subgroup is a join of cyclic subgroups.
  std::vector<ElementSet> work(cyclic);
  for (std::size_t k = 0; k < work.size(); ++k)
    for (const ElementSet& c : cyclic) {
      if (c.is_subset_of(work[k])) continue;
      ElementSet h = g.join(work[k], c);
      if (seen.emplace(h, 0).second) work.push_back(h);
    }
  subgroups_ = std::move(work);
  std::sort(subgroups_.begin(), subgroups_.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  for (int i = 0; i < size(); ++i) index_[subgroups_[i]] = i;
}

int SubgroupLattice::index_of(const ElementSet& h) const {
  auto it = index_.find(h);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> SubgroupLattice::generators(int i) const {
  std::vector<int> elems;
  FiniteGroupTable sub = group_.subgroup_table(subgroups_[i], &elems);
  std::vector<int> out;
  for (int x : sub.generators()) out.push_back(elems[x]);
  return out;
}

MoebiusTable moebius(const SubgroupLattice& l) {
  MoebiusTable mu(l.size(), 0);
  mu[l.top()] = 1;
  for (int i = l.top() - 1; i >= 0; --i) {
    long s = 0;
    for (int j = i + 1; j < l.size(); ++j)
      if (l.contains(j, i)) s += mu[j];
    mu[i] = -s;
  }
  return mu;
}

MoebiusTable moebius_kt(const SubgroupLattice& l, const std::vector<ElementSet>& chief) {
  const FiniteGroupTable& g = l.group();
  MoebiusTable mu(l.size(), 0);
  for (int h = 0; h < l.size(); ++h) {
    // H_i = Gamma_i H with repeats dropped: Gamma = K_0 > K_1 > ... > K_r = H.
    std::vector<int> k;
    for (const ElementSet& gi : chief) {
      int idx = l.index_of(g.join(gi, l.subgroup(h)));
      require(idx >= 0, "Gamma_i H is not in the lattice");
      if (k.empty() || k.back() != idx) k.push_back(idx);
    }
    require(k.front() == l.top() && k.back() == h, "chief series does not run from Gamma to 1");
    const int r = static_cast<int>(k.size()) - 1;
    long v = r % 2 ? -1 : 1;
    // h_i: complements of K_i in L(Gamma) containing K_{i+1}.
    for (int i = 1; i < r && v != 0; ++i) {
      long c = 0;
      for (int x = 0; x < l.size(); ++x) {
        if (!l.contains(x, k[i + 1])) continue;
        if (l.meet(x, k[i]) == k[i + 1] && l.join(x, k[i]) == l.top()) ++c;
      }
      v *= c;
    }
    mu[h] = v;
  }
  return mu;
}

MoebiusTable moebius_kt(const SubgroupLattice& l) { return moebius_kt(l, chief_series_subsets(l.group())); }

MoebiusTable moebius_weisner(const SubgroupLattice& l) {
  const FiniteGroupTable& g = l.group();
  if (!g.is_nilpotent()) throw InputError("Weisner formula needs a nilpotent group");
  MoebiusTable mu(l.size(), 0);
  for (int h = 0; h < l.size(); ++h) {
    if (!g.is_normal(l.subgroup(h))) continue;
    FiniteGroupTable q = g.quotient_table(l.subgroup(h));
    if (!q.is_abelian()) continue;
    bool squarefree = true;
    for (int x = 0; x < q.order() && squarefree; ++x)
      for (auto [p, e] : factorize(q.elem_order(x))) squarefree = squarefree && e == 1;
    if (!squarefree) continue;
    long v = 1;
    for (auto [p, s] : factorize(q.order())) v *= (s % 2 ? -1 : 1) * static_cast<long>(ipow(p, s * (s - 1) / 2));
    mu[h] = v;
  }
  return mu;
}

count_t eulerian_via_moebius(const SubgroupLattice& l, const MoebiusTable& mu, int n) {
  BigInt s = 0;
  for (int i = 0; i < l.size(); ++i)
    if (mu[i]) s += BigInt(mu[i]) * boost::multiprecision::pow(BigInt(l.order(i)), static_cast<unsigned>(n));
  return to_count(s);
}

HallIdentityReport hall_identities(const Presentation& p, const FiniteGroupTable& g, const CountOptions& opt) {
  SubgroupLattice l(g);
  MoebiusTable mu = moebius(l);
  HallIdentityReport out;
  BigInt msum = 0;
  for (int i = 0; i < l.size(); ++i) {
    TowerBuild tb = chief_series(g.subgroup_table(l.subgroup(i)));
    count_t hom = hom_count(p, tb.tower, opt);
    count_t epi = *epi_count(p, tb.tower, opt).epi;
    out.sum_epi = checked_add(out.sum_epi, epi);
    if (mu[i]) msum += BigInt(mu[i]) * hom;
    if (i == l.top()) {
      out.hom = hom;
      out.epi = epi;
    }
  }
  if (msum > std::numeric_limits<long long>::max() || msum < std::numeric_limits<long long>::min())
    throw CapExceeded("Moebius sum does not fit in 64 bits");
  out.moebius_sum = static_cast<long long>(msum);
  return out;
}

int moebius_number(long n) {
  if (n < 1) throw InputError("Moebius function needs n >= 1");
  int v = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    v = -v;
  }
  return v;
}

count_t dihedral_epi_via_moebius(const Presentation& p, int m) {
  if (m < 1) throw InputError("dihedral Moebius inversion needs m >= 1");
  const int n = p.num_generators();
  if (n > 20) throw CapExceeded("too many generators for Z_2 character enumeration");
  std::vector<std::vector<int>> characters;  // Epi(G, Z_2)
  for (long code = 1; code < (1L << n); ++code) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (code >> i) & 1;
    bool ok = true;
    for (const Word& r : p.relators) {
      long sum = 0;
      for (const Letter& lt : r) sum += v[lt.gen];
      ok = ok && sum % 2 == 0;
    }
    if (ok) characters.push_back(v);
  }
  BigInt total = 0;
  for (long l = 1; l <= m; ++l) {
    if (m % l) continue;
    const int w = moebius_number(m / l);
    if (!w) continue;
    std::vector<std::int64_t> moduli;
    for (auto [q, e] : factorize(l)) moduli.push_back(static_cast<std::int64_t>(ipow(q, e)));
    const int dim = static_cast<int>(moduli.size());
    BigInt sum = 0;
    for (const auto& v : characters) {
      std::vector<IntMatrix> acts;
      for (int i = 0; i < n; ++i) {
        IntMatrix a = IntMatrix::Zero(dim, dim);
        for (int j = 0; j < dim; ++j) a(j, j) = v[i] ? moduli[j] - 1 : 1;
        acts.push_back(a);
      }
      sum += homogeneous_count(build_system(p, TwistedAction(moduli, acts))).total();
    }
    total += BigInt(m / l) * w * sum;
  }
  return to_count(total);
}

}  // namespace solvcount
