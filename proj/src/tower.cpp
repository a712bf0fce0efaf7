#include "solvcount/tower.hpp"

#include <algorithm>
#include <random>

#include "solvcount/modlinalg.hpp"

namespace solvcount {

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, int q) {
  ModMatrix c = a * b;
  return c.unaryExpr([q](int x) { return ((x % q) + q) % q; });
}

ModVector mod_apply(const ModMatrix& a, const ModVector& v, int q) {
  ModVector c = a * v;
  return c.unaryExpr([q](int x) { return ((x % q) + q) % q; });
}

ModMatrix mod_inverse_matrix(const ModMatrix& a, int q) {
  const int s = static_cast<int>(a.rows());
  ModMatrix m = a, inv = ModMatrix::Identity(s, s);
  for (int c = 0; c < s; ++c) {
    int p = -1;
    for (int r = c; r < s; ++r)
      if (m(r, c) % q != 0) {
        p = r;
        break;
      }
    if (p < 0) throw InputError("matrix is not invertible mod " + std::to_string(q));
    m.row(c).swap(m.row(p));
    inv.row(c).swap(inv.row(p));
    int u = static_cast<int>(mod_inverse(m(c, c), q));
    for (int k = 0; k < s; ++k) {
      m(c, k) = m(c, k) * u % q;
      inv(c, k) = inv(c, k) * u % q;
    }
    for (int r = 0; r < s; ++r) {
      if (r == c || m(r, c) == 0) continue;
      int f = m(r, c);
      for (int k = 0; k < s; ++k) {
        m(r, k) = ((m(r, k) - f * m(c, k)) % q + q) % q;
        inv(r, k) = ((inv(r, k) - f * inv(c, k)) % q + q) % q;
      }
    }
  }
  return inv;
}

int vector_code(const ModVector& a, int q) {
  int code = 0;
  for (Eigen::Index k = a.size() - 1; k >= 0; --k) code = code * q + a(k);
  return code;
}

ModVector code_vector(int code, int q, int s) {
  ModVector v(s);
  for (int k = 0; k < s; ++k) {
    v(k) = code % q;
    code /= q;
  }
  return v;
}

int ElementaryLayer::module_order() const {
  int n = 1;
  for (int k = 0; k < s; ++k) n *= q;
  return n;
}

bool ElementaryLayer::trivial_cocycle() const {
  for (const auto& v : chi)
    if (!v.isZero()) return false;
  return true;
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (parts.size() != o.parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] != o.parts[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Module helpers

namespace {

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
  return m;
}

}  // namespace

int intertwiner_dim(const std::vector<ModMatrix>& from, const std::vector<ModMatrix>& to, int q) {
  // Unknown X (t x s) with X F = T X; variable X(r,k) has index r*s + k.
  if (from.empty()) {
    return 0;
  }
  const int s = static_cast<int>(from[0].rows()), t = static_cast<int>(to[0].rows());
  std::vector<std::vector<std::int64_t>> eqs;
  for (std::size_t g = 0; g < from.size(); ++g) {
    const ModMatrix& f = from[g];
    const ModMatrix& tm = to[g];
    for (int r = 0; r < t; ++r)
      for (int c = 0; c < s; ++c) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(t) * s, 0);
        for (int k = 0; k < s; ++k) row[r * s + k] += f(k, c);
        for (int k = 0; k < t; ++k) row[k * s + c] -= tm(r, k);
        eqs.push_back(std::move(row));
      }
  }
  IntMatrix m = to_int_matrix(eqs, t * s);
  return t * s - rank_mod_prime(m, q);
}

int commutant_dim(const std::vector<ModMatrix>& action, int q) {
  if (action.empty()) return 0;
  return intertwiner_dim(action, action, q);
}

bool is_irreducible(const std::vector<ModMatrix>& action, int q, int s) {
  if (s <= 1) return true;
  int total = 1;
  for (int k = 0; k < s; ++k) total *= q;
  for (int code = 1; code < total; ++code) {
    std::vector<ModVector> basis{code_vector(code, q, s)};
    for (std::size_t i = 0; i < basis.size() && static_cast<int>(basis.size()) < s; ++i) {
      for (const ModMatrix& a : action) {
        ModVector w = mod_apply(a, basis[i], q);
        IntMatrix m(s, static_cast<Eigen::Index>(basis.size() + 1));
        for (std::size_t j = 0; j < basis.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = basis[j].cast<std::int64_t>();
        m.col(static_cast<Eigen::Index>(basis.size())) = w.cast<std::int64_t>();
        if (rank_mod_prime(m, q) > static_cast<int>(basis.size())) basis.push_back(w);
        if (static_cast<int>(basis.size()) == s) break;
      }
    }
    if (static_cast<int>(basis.size()) < s) return false;
  }
  return true;
}

std::vector<ModMatrix> layer_action(const ExtensionTower& t, int i, int top_level) {
  std::vector<ModMatrix> out;
  for (int g : t.level(top_level).generators()) out.push_back(t.action_on_layer(g, i));
  if (out.empty()) out.push_back(ModMatrix::Identity(t.layer(i).s, t.layer(i).s));
  return out;
}

std::vector<ModuleType> module_types(const ExtensionTower& t) {
  std::vector<ModuleType> types;
  std::vector<std::vector<ModMatrix>> reps;
  const int top = t.depth();
  for (int i = 0; i < t.depth(); ++i) {
    const ElementaryLayer& l = t.layer(i);
    std::vector<ModMatrix> act = layer_action(t, i, top);
    int found = -1;
    for (std::size_t k = 0; k < types.size() && found < 0; ++k)
      if (types[k].q == l.q && types[k].s == l.s && intertwiner_dim(reps[k], act, l.q) > 0)
        found = static_cast<int>(k);
    if (found < 0) {
      ModuleType mt;
      mt.q = l.q;
      mt.s = l.s;
      for (const ModMatrix& a : act)
        if (!a.isIdentity()) mt.zeta = 1;
      mt.kappa = commutant_dim(act, l.q);
      types.push_back(mt);
      reps.push_back(act);
      found = static_cast<int>(types.size()) - 1;
    }
    types[found].layers.push_back(i);
    if (t.constants(i).split)
      ++types[found].complemented;
    else
      ++types[found].non_complemented;
  }
  return types;
}

// ---------------------------------------------------------------------------
// Cocycle enumeration and complements

namespace {

struct CodeArith {
  int q, s, size;
  std::vector<int> add;  // size x size

  CodeArith(int q_, int s_) : q(q_), s(s_) {
    size = 1;
    for (int k = 0; k < s; ++k) size *= q;
    if (size > 4096) throw CapExceeded("layer module too large for tabulated arithmetic");
    add.assign(static_cast<std::size_t>(size) * size, 0);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        ModVector v = code_vector(a, q, s) + code_vector(b, q, s);
        for (int k = 0; k < s; ++k) v(k) %= q;
        add[static_cast<std::size_t>(a) * size + b] = vector_code(v, q);
      }
  }
  int sum(int a, int b) const { return add[static_cast<std::size_t>(a) * size + b]; }
};

}  // namespace

count_t count_twisted_cocycles(const FiniteGroupTable& base, const ElementaryLayer& layer, bool with_cocycle,
                               count_t max_candidates) {
  const int n = base.order();
  CodeArith ar(layer.q, layer.s);
  const std::vector<int>& gens = base.generators();
  const int t = static_cast<int>(gens.size());
  double space = 1;
  for (int k = 0; k < t; ++k) space *= ar.size;
  if (space > static_cast<double>(max_candidates))
    throw CapExceeded("cocycle enumeration space " + std::to_string(space) + " exceeds cap");
  // act[x * size + c] = code of sigma_x(c); chi codes per edge.
  std::vector<int> act(static_cast<std::size_t>(n) * ar.size);
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < ar.size; ++c)
      act[static_cast<std::size_t>(x) * ar.size + c] =
          vector_code(mod_apply(layer.sigma[x], code_vector(c, layer.q, layer.s), layer.q), layer.q);
  std::vector<int> edge_chi(static_cast<std::size_t>(n) * t, 0);
  if (with_cocycle)
    for (int x = 0; x < n; ++x)
      for (int k = 0; k < t; ++k) edge_chi[static_cast<std::size_t>(x) * t + k] = vector_code(layer.cocycle(x, gens[k]), layer.q);
  std::vector<int> parent(n, -1), via(n, -1), order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int k = 0; k < t; ++k) {
      int y = base.mul(order[i], gens[k]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        via[y] = k;
        order.push_back(y);
      }
    }
  auto edge_value = [&](const std::vector<int>& f, const std::vector<int>& vals, int x, int k) {
    int v = act[static_cast<std::size_t>(x) * ar.size + vals[k]];
    return ar.sum(ar.sum(f[x], v), edge_chi[static_cast<std::size_t>(x) * t + k]);
  };
  count_t count = 0;
  std::vector<int> vals(t, 0), f(n, 0);
  while (true) {
    f[0] = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      int y = order[i];
      f[y] = edge_value(f, vals, parent[y], via[y]);
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int k = 0; k < t && ok; ++k) ok = f[base.mul(x, gens[k])] == edge_value(f, vals, x, k);
    if (ok) ++count;
    int k = 0;
    while (k < t && ++vals[k] == ar.size) vals[k++] = 0;
    if (k == t) break;
  }
  return count;
}

ComplementCounts complement_counts(const ExtensionTower& t, int i, bool with_search) {
  const ElementaryLayer& l = t.layer(i);
  const LayerConstants& c = t.constants(i);
  const FiniteGroupTable& base = t.level(i);
  const FiniteGroupTable& ext = t.level(i + 1);
  ComplementCounts out;
  if (c.split) {
    out.by_cocycles = count_twisted_cocycles(base, l, false);
    count_t e_pow = c.zeta ? static_cast<count_t>(l.module_order()) : 1;
    out.by_gaschutz = checked_mul(e_pow, ipow(static_cast<count_t>(l.q), static_cast<unsigned>(c.kappa * (c.alpha - 1))));
  }
  if (!with_search) return out;
  // Direct search: each complement meets the fibre over every base generator
  // in exactly one element.
  const std::vector<int>& gens = base.generators();
  const int n = base.order(), size = l.module_order();
  double space = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) space *= size;
  if (space > 2e7) throw CapExceeded("complement search space too large");
  std::vector<int> pick(gens.size(), 0), lifted(gens.size());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) lifted[k] = gens[k] + n * pick[k];
    ElementSet h = ext.closure(std::span<const int>(lifted));
    if (h.count() == static_cast<std::size_t>(n)) ++out.by_search;
    std::size_t k = 0;
    while (k < gens.size() && ++pick[k] == size) pick[k++] = 0;
    if (k == gens.size()) break;
  }
  return out;
}

count_t complement_count(const ExtensionTower& t, int i) {
  ComplementCounts c = complement_counts(t, i);
  require(c.by_cocycles == c.by_gaschutz && c.by_gaschutz == c.by_search,
          "complement counts disagree at layer " + std::to_string(i) + ": cocycles " + std::to_string(c.by_cocycles) +
              ", gaschutz " + std::to_string(c.by_gaschutz) + ", search " + std::to_string(c.by_search));
  return c.by_search;
}

// ---------------------------------------------------------------------------
// ExtensionTower

ExtensionTower::ExtensionTower() : levels_{FiniteGroupTable()} {}

void ExtensionTower::push_layer(ElementaryLayer l) {
  const FiniteGroupTable& base = levels_.back();
  const int n = base.order();
  const std::string where = "layer " + std::to_string(layers_.size()) + ": ";
  if (!is_prime(l.q)) throw InputError(where + "q must be prime");
  if (l.s < 1 || l.s > 12) throw InputError(where + "rank out of range");
  if (static_cast<long>(n) * l.module_order() > 4096) throw CapExceeded(where + "group order exceeds 4096");
  if (l.sigma.size() != static_cast<std::size_t>(n)) throw InputError(where + "monodromy table has wrong size");
  if (l.chi.size() != static_cast<std::size_t>(n) * n) throw InputError(where + "cocycle table has wrong size");
  for (auto& m : l.sigma) {
    if (m.rows() != l.s || m.cols() != l.s) throw InputError(where + "monodromy matrix has wrong shape");
    m = m.unaryExpr([q = l.q](int x) { return ((x % q) + q) % q; });
  }
  for (auto& v : l.chi) {
    if (v.size() != l.s) throw InputError(where + "cocycle vector has wrong length");
    v = v.unaryExpr([q = l.q](int x) { return ((x % q) + q) % q; });
  }
  if (!l.sigma[0].isIdentity()) throw InputError(where + "monodromy of the identity is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mod_mul(l.sigma[a], l.sigma[b], l.q) != l.sigma[base.mul(a, b)])
        throw InputError(where + "monodromy is not a homomorphism");
  for (int b = 0; b < n; ++b)
    if (!l.cocycle(0, b).isZero() || !l.cocycle(b, 0).isZero())
      throw InputError(where + "cocycle is not normalized");
  if (!l.trivial_cocycle()) {
    auto check = [&](int a, int b, int c) {
      ModVector lhs = mod_apply(l.sigma[a], l.cocycle(b, c), l.q) - l.cocycle(base.mul(a, b), c) +
                      l.cocycle(a, base.mul(b, c)) - l.cocycle(a, b);
      for (int k = 0; k < l.s; ++k)
        if (((lhs(k) % l.q) + l.q) % l.q != 0) throw InputError(where + "cocycle identity fails");
    };
    if (n <= 96) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(0xc0c7c1eULL);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int it = 0; it < 300000; ++it) check(pick(rng), pick(rng), pick(rng));
    }
  }
  {
    std::vector<ModMatrix> act;
    for (int g : base.generators()) act.push_back(l.sigma[g]);
    if (!is_irreducible(act, l.q, l.s))
      throw InputError(where + "module is reducible, so the layer is not a chief factor");
  }

  const int size = l.module_order(), m = n * size;
  std::vector<ModVector> vecs(size);
  for (int c = 0; c < size; ++c) vecs[c] = code_vector(c, l.q, l.s);
  std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    const int b1 = x % n;
    const ModVector& a1 = vecs[x / n];
    for (int y = 0; y < m; ++y) {
      const int b2 = y % n;
      ModVector a = a1 + l.sigma[b1] * vecs[y / n] + l.cocycle(b1, b2);
      for (int k = 0; k < l.s; ++k) a(k) %= l.q;
      table[static_cast<std::size_t>(x) * m + y] = base.mul(b1, b2) + n * vector_code(a, l.q);
    }
  }
  layers_.push_back(std::move(l));
  levels_.emplace_back(m, std::move(table));
  constants_.push_back(compute_constants(depth() - 1));
}

LayerConstants ExtensionTower::compute_constants(int i) const {
  const ElementaryLayer& l = layers_[i];
  LayerConstants c;
  std::vector<ModMatrix> base_act;
  for (int g : levels_[i].generators()) base_act.push_back(l.sigma[g]);
  for (const ModMatrix& a : base_act)
    if (!a.isIdentity()) c.zeta = 1;
  if (base_act.empty()) base_act.push_back(ModMatrix::Identity(l.s, l.s));
  c.kappa = commutant_dim(base_act, l.q);
  c.split = l.trivial_cocycle() || count_twisted_cocycles(levels_[i], l, true) > 0;
  std::vector<ModMatrix> mine = layer_action(*this, i, i + 1);
  for (int j = 0; j <= i; ++j) {
    bool split = j == i ? c.split : constants_[j].split;
    if (!split || layers_[j].q != l.q || layers_[j].s != l.s) continue;
    if (intertwiner_dim(layer_action(*this, j, i + 1), mine, l.q) > 0) ++c.alpha;
  }
  return c;
}

ModVector ExtensionTower::layer_coordinates(int element, int i) const {
  int e = element % levels_[i + 1].order();
  return code_vector(e / levels_[i].order(), layers_[i].q, layers_[i].s);
}

int ExtensionTower::compose(int base, const ModVector& a, int i) const {
  ModVector r = a.unaryExpr([q = layers_[i].q](int x) { return ((x % q) + q) % q; });
  return base + levels_[i].order() * vector_code(r, layers_[i].q);
}

GroupElement ExtensionTower::decode(int element) const {
  GroupElement g;
  for (int i = 0; i < depth(); ++i) g.parts.push_back(layer_coordinates(element, i));
  return g;
}

int ExtensionTower::encode(const GroupElement& e) const {
  if (static_cast<int>(e.parts.size()) != depth()) throw InputError("group element belongs to a different tower");
  int idx = 0;
  for (int i = 0; i < depth(); ++i) {
    if (e.parts[i].size() != layers_[i].s) throw InputError("group element belongs to a different tower");
    idx = compose(idx, e.parts[i], i);
  }
  return idx;
}

int ExtensionTower::mul_formula(int level, int x, int y) const {
  if (level == 0) return 0;
  const ElementaryLayer& l = layers_[level - 1];
  const int n = levels_[level - 1].order();
  int b1 = x % n, b2 = y % n;
  ModVector a = code_vector(x / n, l.q, l.s) + mod_apply(l.sigma[b1], code_vector(y / n, l.q, l.s), l.q) +
                l.cocycle(b1, b2);
  return compose(mul_formula(level - 1, b1, b2), a, level - 1);
}

int ExtensionTower::inv_formula(int level, int x) const {
  if (level == 0) return 0;
  const ElementaryLayer& l = layers_[level - 1];
  const int n = levels_[level - 1].order();
  int b = x % n;
  int bi = inv_formula(level - 1, b);
  ModVector a = -mod_apply(l.sigma[bi], code_vector(x / n, l.q, l.s), l.q) - l.cocycle(bi, b);
  return compose(bi, a, level - 1);
}

GroupElement ExtensionTower::multiply(const GroupElement& x, const GroupElement& y) const {
  return decode(mul_formula(depth(), encode(x), encode(y)));
}

GroupElement ExtensionTower::inverse(const GroupElement& x) const { return decode(inv_formula(depth(), encode(x))); }

// ---------------------------------------------------------------------------
// Towers from concrete groups

TowerBuild tower_from_series(const FiniteGroupTable& g, const std::vector<ElementSet>& series) {
  const int n = g.order();
  if (series.empty() || !series.front().all() || series.back().count() != 1 || !series.back().test(0))
    throw InputError("series must run from the whole group down to the trivial subgroup");
  for (const ElementSet& h : series) {
    if (static_cast<int>(h.size()) != n) throw InputError("series member has wrong size");
    if (g.closure(h) != h) throw InputError("series member is not a subgroup");
    if (!g.is_normal(h)) throw InputError("series member is not normal");
  }
  TowerBuild out;
  std::vector<int> idx(n, 0);  // element -> index in current level B_i
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    const ElementSet& upper = series[i];
    const ElementSet& lower = series[i + 1];
    if (!lower.is_subset_of(upper) || lower == upper) throw InputError("series is not strictly decreasing");
    long index = static_cast<long>(upper.count() / lower.count());
    auto f = factorize(index);
    if (f.size() != 1) throw InputError("series factor order is not a prime power");
    const int q = static_cast<int>(f[0].first), s = f[0].second;
    std::vector<int> lower_elems = set_elements(lower);
    for (int x : set_elements(upper)) {
      if (!lower.test(g.power(x, q))) throw InputError("series factor is not elementary abelian");
      for (int y : set_elements(upper))
        if (!lower.test(g.commutator(x, y))) throw InputError("series factor is not abelian");
    }
    // Basis: lowest-index elements that enlarge the span.
    std::vector<int> basis;
    ElementSet span = lower;
    for (int x : set_elements(upper)) {
      if (span.test(x)) continue;
      basis.push_back(x);
      span = g.join(span, g.closure(std::span<const int>(&x, 1)));
      if (span == upper) break;
    }
    require(static_cast<int>(basis.size()) == s, "basis size mismatch in series factor");
    int size = 1;
    for (int k = 0; k < s; ++k) size *= q;
    std::vector<int> coord(n, -1);
    for (int code = 0; code < size; ++code) {
      ModVector a = code_vector(code, q, s);
      int rep = 0;
      for (int k = 0; k < s; ++k) rep = g.mul(rep, g.power(basis[k], a(k)));
      for (int y : lower_elems) coord[g.mul(rep, y)] = code;
    }
    const FiniteGroupTable& base = out.tower.level(static_cast<int>(i));
    const int nb = base.order();
    std::vector<int> section(nb, -1);
    for (int x = 0; x < n; ++x)
      if (section[idx[x]] < 0) section[idx[x]] = x;
    ElementaryLayer layer;
    layer.q = q;
    layer.s = s;
    layer.sigma.resize(nb);
    layer.chi.resize(static_cast<std::size_t>(nb) * nb);
    auto vec_of = [&](int x) {
      require(coord[x] >= 0, "element outside the series factor");
      return code_vector(coord[x], q, s);
    };
    for (int b = 0; b < nb; ++b) {
      ModMatrix m(s, s);
      for (int k = 0; k < s; ++k) m.col(k) = vec_of(g.conj(section[b], basis[k]));
      layer.sigma[b] = m;
    }
    for (int b1 = 0; b1 < nb; ++b1)
      for (int b2 = 0; b2 < nb; ++b2) {
        int prod = g.mul(g.mul(section[b1], section[b2]), g.inv(section[base.mul(b1, b2)]));
        layer.chi[static_cast<std::size_t>(b1) * nb + b2] = vec_of(prod);
      }
    out.tower.push_layer(std::move(layer));
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      int b = idx[x];
      next[x] = b + nb * coord[g.mul(x, g.inv(section[b]))];
    }
    idx.swap(next);
  }
  const FiniteGroupTable& top = out.tower.group();
  require(top.order() == n, "tower order mismatch");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      require(idx[g.mul(x, y)] == top.mul(idx[x], idx[y]), "series coordinates are not a homomorphism");
  out.to_tower = std::move(idx);
  return out;
}

std::vector<ElementSet> chief_series_subsets(const FiniteGroupTable& g, std::size_t cap) {
  if (static_cast<std::size_t>(g.order()) > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  if (!g.is_solvable()) throw InputError("group is not solvable");
  const int n = g.order();
  // Conjugacy classes, as lists of elements.
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    classes.emplace_back();
    for (int y = 0; y < n; ++y) {
      int c = g.conj(y, x);
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(classes.size()) - 1;
        classes.back().push_back(c);
      }
    }
  }
  // Bottom-up: N_0 = 1 < N_1 < ... with N_{k+1}/N_k minimal normal in G/N_k.
  std::vector<ElementSet> ascending;
  ElementSet current(n);
  current.set(0);
  ascending.push_back(current);
  while (!current.all()) {
    ElementSet best;
    std::vector<int> gens_current = set_elements(current);
    for (const auto& cls : classes) {
      if (current.test(cls.front())) continue;
      std::vector<int> gens = gens_current;
      gens.insert(gens.end(), cls.begin(), cls.end());
      ElementSet h = g.closure(std::span<const int>(gens));
      if (best.size() == 0 || h.count() < best.count()) best = h;
    }
    current = best;
    ascending.push_back(current);
  }
  return {ascending.rbegin(), ascending.rend()};
}

TowerBuild chief_series(const FiniteGroupTable& g, std::size_t cap) {
  return tower_from_series(g, chief_series_subsets(g, cap));
}

}  // namespace solvcount
