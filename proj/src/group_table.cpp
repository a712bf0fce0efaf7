#include "solvcount/group_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace solvcount {

FiniteGroupTable::FiniteGroupTable() : n_(1), mul_{0}, inv_{0}, elem_order_{1} {}

FiniteGroupTable::FiniteGroupTable(int order, std::vector<std::int32_t> table) : n_(order), mul_(std::move(table)) {
  if (n_ < 1) throw InputError("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(n_) * n_) throw InputError("multiplication table has wrong size");
  for (auto v : mul_)
    if (v < 0 || v >= n_) throw InputError("multiplication table entry out of range");
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw InputError("element 0 is not the identity");
  ElementSet seen(n_);
  for (int a = 0; a < n_; ++a) {
    seen.reset();
    for (int b = 0; b < n_; ++b) seen.set(mul(a, b));
    if (!seen.all()) throw InputError("multiplication table row " + std::to_string(a) + " is not a permutation");
    seen.reset();
    for (int b = 0; b < n_; ++b) seen.set(mul(b, a));
    if (!seen.all()) throw InputError("multiplication table column " + std::to_string(a) + " is not a permutation");
  }
  auto assoc = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw InputError("multiplication table is not associative at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n_));
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  inv_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  elem_order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = k;
  }
  gens_ = compute_generators();
}

int FiniteGroupTable::power(int a, long k) const {
  long o = elem_order_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

ElementSet FiniteGroupTable::full_set() const {
  ElementSet s(n_);
  s.set();
  return s;
}

ElementSet FiniteGroupTable::closure(std::span<const int> gens) const {
  ElementSet s(n_);
  s.set(0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = mul(x, g);
        if (!s.test(y)) {
          s.set(y);
          next.push_back(y);
        }
      }
    frontier.swap(next);
  }
  return s;
}

ElementSet FiniteGroupTable::closure(const ElementSet& s) const {
  std::vector<int> gens = set_elements(s);
  return closure(std::span<const int>(gens));
}

ElementSet FiniteGroupTable::join(const ElementSet& a, const ElementSet& b) const { return closure(a | b); }

ElementSet FiniteGroupTable::normal_closure(const ElementSet& s) const {
  ElementSet conj_set(n_);
  std::vector<int> elems = set_elements(s);
  for (int x : elems)
    for (int g = 0; g < n_; ++g) conj_set.set(conj(g, x));
  return closure(conj_set);
}

bool FiniteGroupTable::is_normal(const ElementSet& h) const {
  std::vector<int> elems = set_elements(h);
  std::vector<int> gens = generators();
  for (int x : elems)
    for (int g : gens)
      if (!h.test(conj(g, x))) return false;
  return true;
}

ElementSet FiniteGroupTable::derived_subgroup(const ElementSet& h) const {
  std::vector<int> elems = set_elements(h);
  ElementSet comms(n_);
  for (int a : elems)
    for (int b : elems) comms.set(commutator(a, b));
  return closure(comms);
}

ElementSet FiniteGroupTable::center() const {
  ElementSet z(n_);
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.set(a);
  }
  return z;
}

bool FiniteGroupTable::is_abelian() const { return center().count() == static_cast<std::size_t>(n_); }

bool FiniteGroupTable::is_solvable() const {
  ElementSet h = full_set();
  while (h.count() > 1) {
    ElementSet d = derived_subgroup(h);
    if (d == h) return false;
    h = d;
  }
  return true;
}

bool FiniteGroupTable::is_nilpotent() const {
  // Upper central series: Z_{i+1} = {a : [a, g] in Z_i for all g}.
  ElementSet z(n_);
  z.set(0);
  while (true) {
    ElementSet next(n_);
    for (int a = 0; a < n_; ++a) {
      bool ok = true;
      for (int g = 0; g < n_ && ok; ++g) ok = z.test(commutator(a, g));
      if (ok) next.set(a);
    }
    if (next.all()) return true;
    if (next == z) return false;
    z = next;
  }
}

std::vector<int> FiniteGroupTable::compute_generators() const {
  std::vector<int> by_order(n_);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return elem_order_[a] > elem_order_[b]; });
  std::vector<int> gens;
  ElementSet h(n_);
  h.set(0);
  while (!h.all()) {
    for (int x : by_order) {
      if (h.test(x)) continue;
      gens.push_back(x);
      h = closure(std::span<const int>(gens));
      break;
    }
  }
  return gens;
}

FiniteGroupTable FiniteGroupTable::subgroup_table(const ElementSet& h, std::vector<int>* out_elements) const {
  std::vector<int> elems = set_elements(h);
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elems.size());
  std::vector<std::int32_t> m(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = pos[mul(elems[i], elems[j])];
      if (p < 0) throw InputError("subset is not closed under multiplication");
      m[static_cast<std::size_t>(i) * k + j] = p;
    }
  if (out_elements) *out_elements = elems;
  return FiniteGroupTable(k, std::move(m));
}

FiniteGroupTable FiniteGroupTable::quotient_table(const ElementSet& normal, std::vector<int>* coset_of) const {
  std::vector<int> coset(n_, -1), reps;
  std::vector<int> nelems = set_elements(normal);
  for (int g = 0; g < n_; ++g) {
    if (coset[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int x : nelems) coset[mul(g, x)] = id;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::int32_t> m(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i) * k + j] = coset[mul(reps[i], reps[j])];
  if (coset_of) *coset_of = coset;
  return FiniteGroupTable(k, std::move(m));
}

std::vector<int> set_elements(const ElementSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::int32_t> m(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m[static_cast<std::size_t>(x) * n + y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return FiniteGroupTable(n, std::move(m));
}

FiniteGroupTable cyclic_table(int n) {
  std::vector<std::int32_t> m(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return FiniteGroupTable(n, std::move(m));
}

FiniteGroupTable read_table(std::istream& in) {
  std::string line, word;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("table file is empty");
  std::istringstream head(line);
  long n = 0;
  if (!(head >> word >> n) || word != "order" || n < 1 || n > 4096)
    throw InputError("table file must start with 'order N'");
  std::vector<std::int32_t> m;
  m.reserve(static_cast<std::size_t>(n) * n);
  for (long r = 0; r < n; ++r) {
    if (!next_line()) throw InputError("table file has fewer than " + std::to_string(n) + " rows");
    std::istringstream row(line);
    long v;
    long count = 0;
    while (row >> v) {
      m.push_back(static_cast<std::int32_t>(v));
      ++count;
    }
    if (!row.eof() || count != n)
      throw InputError("table row " + std::to_string(r) + " must contain " + std::to_string(n) + " integers");
  }
  return FiniteGroupTable(static_cast<int>(n), std::move(m));
}

FiniteGroupTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file '" + path + "'");
  return read_table(in);
}

void write_table(std::ostream& out, const FiniteGroupTable& t) {
  out << "order " << t.order() << '\n';
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) out << (b ? " " : "") << t.mul(a, b);
    out << '\n';
  }
}

namespace {

struct WordTree {
  std::vector<int> parent, gen_index;  // element = parent * gens[gen_index]
  std::vector<int> bfs_order;
};

WordTree word_tree(const FiniteGroupTable& t, const std::vector<int>& gens) {
  WordTree w;
  w.parent.assign(t.order(), -1);
  w.gen_index.assign(t.order(), -1);
  std::vector<char> seen(t.order(), 0);
  seen[0] = 1;
  w.bfs_order.push_back(0);
  for (std::size_t i = 0; i < w.bfs_order.size(); ++i) {
    int x = w.bfs_order[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = t.mul(x, gens[k]);
      if (seen[y]) continue;
      seen[y] = 1;
      w.parent[y] = x;
      w.gen_index[y] = static_cast<int>(k);
      w.bfs_order.push_back(y);
    }
  }
  return w;
}

// Enumerates homomorphisms a -> b determined by generator images of matching
// order; calls visit(map) for each bijective one. Stops when visit returns false.
template <typename Visit>
void for_each_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b, Visit&& visit) {
  if (a.order() != b.order()) return;
  std::vector<int> gens = a.generators();
  WordTree tree = word_tree(a, gens);
  std::vector<std::vector<int>> candidates(gens.size());
  double total = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (int y = 0; y < b.order(); ++y)
      if (b.elem_order(y) == a.elem_order(gens[k])) candidates[k].push_back(y);
    total *= static_cast<double>(candidates[k].size());
    if (candidates[k].empty()) return;
  }
  if (total > 5e7)
    throw CapExceeded("isomorphism search space too large (" + std::to_string(total) + " candidates)");
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<int> img(gens.size()), phi(a.order());
  ElementSet hit(b.order());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) img[k] = candidates[k][pick[k]];
    phi[0] = 0;
    for (std::size_t i = 1; i < tree.bfs_order.size(); ++i) {
      int x = tree.bfs_order[i];
      phi[x] = b.mul(phi[tree.parent[x]], img[tree.gen_index[x]]);
    }
    bool ok = true;
    for (int x = 0; x < a.order() && ok; ++x)
      for (std::size_t k = 0; k < gens.size() && ok; ++k) ok = phi[a.mul(x, gens[k])] == b.mul(phi[x], img[k]);
    if (ok) {
      hit.reset();
      for (int x = 0; x < a.order(); ++x) hit.set(phi[x]);
      if (hit.all() && !visit(phi)) return;
    }
    std::size_t k = 0;
    while (k < gens.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == gens.size()) return;
  }
}

}  // namespace

count_t aut_order(const FiniteGroupTable& t, std::size_t cap) {
  if (static_cast<std::size_t>(t.order()) > cap)
    throw CapExceeded("group order " + std::to_string(t.order()) + " exceeds cap " + std::to_string(cap));
  count_t n = 0;
  for_each_isomorphism(t, t, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<int> find_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  std::vector<int> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& phi) {
    found = phi;
    return false;
  });
  return found;
}

}  // namespace solvcount
