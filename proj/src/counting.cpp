#include "solvcount/counting.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/cohomology.hpp"
#include "solvcount/parallel.hpp"

namespace solvcount {

bool is_homomorphism(const Presentation& p, const FiniteGroupTable& target, const std::vector<int>& images) {
  for (const Word& r : p.relators) {
    int acc = 0;
    for (const Letter& l : r) {
      int b = images[l.gen];
      acc = target.mul(acc, l.exp > 0 ? b : target.inv(b));
    }
    if (acc != 0) return false;
  }
  return true;
}

bool generates(const FiniteGroupTable& target, const std::vector<int>& images) {
  return target.closure(std::span<const int>(images)).count() == static_cast<std::size_t>(target.order());
}

namespace {

// Complement count of a level, all routes reconciled when the direct search
// is within its cap.
count_t level_complements(const ExtensionTower& t, int i) {
  try {
    return complement_count(t, i);
  } catch (const CapExceeded&) {
    ComplementCounts c = complement_counts(t, i, false);
    require(c.by_cocycles == c.by_gaschutz, "complement counts disagree at layer " + std::to_string(i));
    return c.by_cocycles;
  }
}

}  // namespace

LiftResult epi_lift(const Presentation& p, const ExtensionTower& t, int level, const GeneratorImageMap& rho,
                    bool keep_maps) {
  const ElementaryLayer& layer = t.layer(level);
  const FiniteGroupTable& base = t.level(level);
  const FiniteGroupTable& ext = t.level(level + 1);
  const int n = p.num_generators(), s = layer.s, q = layer.q;
  CocycleSystem sys = build_system(p, base, layer, rho.images);
  LayerSolution sol = solve_layer_system(sys, q);
  LiftResult out;
  out.d = sol.d;
  out.beta = h1_dim(p, base, layer, rho.images);
  if (!sol.solvable) return out;
  out.epsilon = 1;
  out.lifts = ipow(static_cast<count_t>(q), static_cast<unsigned>(sol.d));
  std::vector<int> coeff(sol.kernel.size(), 0);
  std::vector<int> images(n);
  while (true) {
    IntVector x = sol.witness;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      if (coeff[k]) x += coeff[k] * sol.kernel[k];
    for (int i = 0; i < n; ++i) {
      ModVector a(s);
      for (int c = 0; c < s; ++c) a(c) = static_cast<int>(mod_reduce(x(i * s + c), q));
      images[i] = t.compose(rho.images[i], a, level);
    }
    if (generates(ext, images)) {
      ++out.surjective;
      if (keep_maps) out.maps.push_back(GeneratorImageMap{level + 1, images, true});
    }
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == q) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return out;
}

count_t hom_count(const Presentation& p, const ExtensionTower& t, const CountOptions& opt) {
  const int n = p.num_generators();
  std::vector<std::vector<int>> frontier{std::vector<int>(n, 0)};
  for (int i = 0; i < t.depth(); ++i) {
    const ElementaryLayer& layer = t.layer(i);
    const bool last = i + 1 == t.depth();
    struct Lifted {
      count_t count = 0;
      std::vector<std::vector<int>> maps;
    };
    std::vector<Lifted> parts = parallel_map<Lifted>(frontier.size(), opt.threads, [&](std::size_t r) {
      Lifted out;
      LayerSolution sol = solve_layer_system(build_system(p, t.level(i), layer, frontier[r]), layer.q);
      if (!sol.solvable) return out;
      out.count = ipow(static_cast<count_t>(layer.q), static_cast<unsigned>(sol.d));
      if (out.count > opt.frontier_cap) throw CapExceeded("homomorphism count exceeds cap");
      if (last) return out;
      std::vector<int> coeff(sol.kernel.size(), 0);
      while (true) {
        IntVector x = sol.witness;
        for (std::size_t k = 0; k < coeff.size(); ++k)
          if (coeff[k]) x += coeff[k] * sol.kernel[k];
        std::vector<int> images(n);
        for (int g = 0; g < n; ++g) {
          ModVector a(layer.s);
          for (int c = 0; c < layer.s; ++c) a(c) = static_cast<int>(mod_reduce(x(g * layer.s + c), layer.q));
          images[g] = t.compose(frontier[r][g], a, i);
        }
        out.maps.push_back(std::move(images));
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == layer.q) coeff[k++] = 0;
        if (k == coeff.size()) break;
      }
      return out;
    });
    count_t total = 0;
    for (const Lifted& l : parts) {
      total = checked_add(total, l.count);
      if (total > opt.frontier_cap) throw CapExceeded("homomorphism count exceeds cap at level " + std::to_string(i + 1));
    }
    if (last) return total;
    std::vector<std::vector<int>> next;
    next.reserve(total);
    for (Lifted& l : parts)
      for (auto& m : l.maps) next.push_back(std::move(m));
    frontier = std::move(next);
  }
  return frontier.size();
}

EpiEnumeration epi_enumerate(const Presentation& p, const ExtensionTower& t, const CountOptions& opt, bool keep_top) {
  const int n = p.num_generators();
  EpiEnumeration out;
  std::vector<GeneratorImageMap> frontier{GeneratorImageMap{0, std::vector<int>(n, 0), true}};
  for (int i = 0; i < t.depth() && !frontier.empty(); ++i) {
    const bool last = i + 1 == t.depth();
    const LayerConstants& lc = t.constants(i);
    const ElementaryLayer& layer = t.layer(i);
    LevelStats st;
    st.level = i;
    st.q = layer.q;
    st.s = layer.s;
    st.zeta = lc.zeta;
    st.kappa = lc.kappa;
    st.alpha = lc.alpha;
    st.split = lc.split;
    st.complements = level_complements(t, i);
    st.epi_in = frontier.size();
    std::vector<LiftResult> lifted = parallel_map<LiftResult>(frontier.size(), opt.threads, [&](std::size_t r) {
      LiftResult res = epi_lift(p, t, i, frontier[r], !last || keep_top);
      // A lift is surjective exactly when its image is not a complement.
      const count_t expected = res.epsilon ? res.lifts - st.complements : 0;
      require(res.epsilon || st.complements == 0, "unliftable epimorphism over a split layer");
      require(res.surjective == expected,
              "surjective lifts " + std::to_string(res.surjective) + " differ from epsilon q^d - c = " +
                  std::to_string(expected) + " at level " + std::to_string(i));
      return res;
    });
    // Closed arithmetic: |E|^zeta sum (epsilon q^beta - c_chi q^(kappa (alpha - 1))).
    const count_t e_pow = lc.zeta ? static_cast<count_t>(layer.module_order()) : 1;
    const count_t c_term = lc.split ? ipow(static_cast<count_t>(layer.q), static_cast<unsigned>(lc.kappa * (lc.alpha - 1))) : 0;
    BigInt closed = 0;
    std::vector<GeneratorImageMap> next;
    for (LiftResult& res : lifted) {
      st.lifts = checked_add(st.lifts, res.lifts);
      st.epi_out = checked_add(st.epi_out, res.surjective);
      if (res.epsilon) {
        ++st.sum_epsilon;
        st.sum_q_beta = checked_add(st.sum_q_beta, ipow(static_cast<count_t>(layer.q), static_cast<unsigned>(res.beta)));
        require(res.d == res.beta + layer.s * lc.zeta, "d differs from beta + s zeta");
      }
      closed += BigInt(e_pow) * (BigInt(res.epsilon) * boost::multiprecision::pow(BigInt(layer.q), res.beta) - c_term);
      if (st.epi_out > opt.frontier_cap) throw CapExceeded("epimorphism frontier exceeds cap at level " + std::to_string(i + 1));
      for (GeneratorImageMap& m : res.maps) next.push_back(std::move(m));
    }
    require(closed == BigInt(st.epi_out), "level " + std::to_string(i) + ": enumerated " + std::to_string(st.epi_out) +
                                              " surjective lifts, closed form gives " + closed.str());
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    out.levels.push_back(st);
    if (last) out.count = st.epi_out;
  }
  if (t.depth() == 0) out.count = 1;
  if (keep_top) out.top = std::move(frontier);
  return out;
}

CountReport epi_count(const Presentation& p, const ExtensionTower& t, const CountOptions& opt) {
  EpiEnumeration e = epi_enumerate(p, t, opt);
  CountReport rep;
  rep.target = t.name;
  rep.epi = e.count;
  rep.levels = std::move(e.levels);
  rep.provenance["epi"] = "lifting through the chief series, reconciled with the per-level closed arithmetic";
  return rep;
}

CountReport delta(const Presentation& p, const ExtensionTower& t, const CountOptions& opt, std::optional<count_t> aut) {
  CountReport rep = epi_count(p, t, opt);
  rep.aut = aut ? *aut : aut_order(t.group());
  rep.provenance["aut"] = aut ? "supplied" : "generator-image search";
  require(*rep.epi % *rep.aut == 0, "Epi count " + std::to_string(*rep.epi) + " is not divisible by |Aut| " +
                                        std::to_string(*rep.aut));
  rep.delta = *rep.epi / *rep.aut;
  rep.provenance["delta"] = "|Epi| / |Aut|";
  return rep;
}

count_t gaschutz_eulerian(const ExtensionTower& t, int n) {
  if (n < 0) throw InputError("number of generators must be nonnegative");
  BigInt total = 1;
  for (const ModuleType& mt : module_types(t)) {
    const BigInt q(mt.q);
    const int sn = mt.s * n;
    total *= boost::multiprecision::pow(q, static_cast<unsigned>(mt.s * mt.non_complemented * n));
    for (int k = 0; k < mt.complemented; ++k)
      total *= boost::multiprecision::pow(q, static_cast<unsigned>(sn)) -
               boost::multiprecision::pow(q, static_cast<unsigned>(mt.s * mt.zeta + k * mt.kappa));
  }
  if (total < 0) return 0;
  return to_count(total);
}

Presentation presentation_from_table(const FiniteGroupTable& g) {
  const std::vector<int>& gens = g.generators();
  const int n = g.order(), t = static_cast<int>(gens.size());
  Presentation p;
  for (int k = 0; k < t; ++k) p.generators.push_back("g" + std::to_string(k + 1));
  std::vector<Word> word(n);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<char>> tree_edge(n, std::vector<char>(t, 0));
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int k = 0; k < t; ++k) {
      int y = g.mul(x, gens[k]);
      if (seen[y]) continue;
      seen[y] = 1;
      word[y] = word[x];
      word[y].push_back(Letter{k, 1});
      tree_edge[x][k] = 1;
      queue.push_back(y);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < t; ++k) {
      if (tree_edge[x][k]) continue;
      Word r = word[x];
      r.push_back(Letter{k, 1});
      Word rel = free_reduce(word_concat(r, word_inverse(word[g.mul(x, gens[k])])));
      if (!rel.empty()) p.relators.push_back(std::move(rel));
    }
  return p;
}

count_t aut_order_by_lifting(const ExtensionTower& t, const CountOptions& opt) {
  return epi_count(presentation_from_table(t.group()), t, opt).epi.value();
}

count_t epi_count_q2p(const Presentation& p, int q, int prime_p, int r, const CountOptions& opt) {
  ExtensionTower v = builtin_group("V(" + std::to_string(q) + "," + std::to_string(prime_p) + "," + std::to_string(r) + ")");
  require(v.depth() == 3, "V(q,p,r) tower is not Z_2, Z_p, Z_q^2");
  // Epi(G, D_2p) from the lower two levels.
  ExtensionTower dihedral;
  for (int i = 0; i < 2; ++i) dihedral.push_layer(v.layer(i));
  EpiEnumeration e = epi_enumerate(p, dihedral, opt, true);
  BigInt total = 0;
  for (const GeneratorImageMap& rho : e.top)
    total += boost::multiprecision::pow(BigInt(q), h1_dim(p, v.level(2), v.layer(2), rho.images)) - 1;
  return to_count(BigInt(q) * q * total);
}

}  // namespace solvcount
