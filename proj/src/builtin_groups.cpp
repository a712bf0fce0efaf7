#include "solvcount/builtin_groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <numeric>

namespace solvcount {

namespace {

using Table = std::vector<std::int32_t>;

int mod(long x, long m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

FiniteGroupTable dihedral_table(int m) {
  const int n = 2 * m;
  Table t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = x % m, v = x / m, s = y % m, w = y / m;
      int uu = mod(u + (v ? -s : s), m);
      t[static_cast<std::size_t>(x) * n + y] = uu + m * ((v + w) % 2);
    }
  return FiniteGroupTable(n, std::move(t));
}

FiniteGroupTable binary_dihedral_table(int m) {
  const int n = 4 * m, h = 2 * m;
  Table t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = x % h, v = x / h, s = y % h, w = y / h;
      int uu = u + (v ? -s : s) + (v && w ? m : 0);
      t[static_cast<std::size_t>(x) * n + y] = mod(uu, h) + h * ((v + w) % 2);
    }
  return FiniteGroupTable(n, std::move(t));
}

FiniteGroupTable metacyclic_table(int s, int r, int u) {
  if (s < 1 || r < 1) throw InputError("M(s,r,u): s and r must be positive");
  if (std::gcd(mod(u, s), s) != 1 && s > 1) throw InputError("M(s,r,u): u must be a unit mod s");
  long ur = 1;
  for (int k = 0; k < r; ++k) ur = ur * mod(u, s) % s;
  if (s > 1 && ur % s != 1) throw InputError("M(s,r,u): u^r must be 1 mod s");
  const int n = s * r;
  std::vector<int> upow(r, 1 % std::max(s, 1));
  for (int j = 1; j < r; ++j) upow[j] = static_cast<int>(static_cast<long>(upow[j - 1]) * mod(u, s) % s);
  Table t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = x % s, j = x / s, b = y % s, k = y / s;
      t[static_cast<std::size_t>(x) * n + y] = mod(a + static_cast<long>(upow[j]) * b, s) + s * ((j + k) % r);
    }
  return FiniteGroupTable(n, std::move(t));
}

namespace {

// Subgroup {u : d | u, v = 0} of the cyclic part in an index-(u + c v) layout.
ElementSet cyclic_part_subgroup(int order, int cyc, int d) {
  ElementSet s(order);
  for (int u = 0; u < cyc; u += d) s.set(u);
  return s;
}

// Chain <a> > <a^{p1}> > <a^{p1 p2}> > ... with primes ascending.
void append_cyclic_chain(std::vector<ElementSet>& series, int order, int cyc) {
  int d = 1;
  for (auto [p, e] : factorize(cyc))
    for (int k = 0; k < e; ++k) {
      d *= static_cast<int>(p);
      series.push_back(cyclic_part_subgroup(order, cyc, d));
    }
}

BuiltinGroup from_series(std::string name, FiniteGroupTable concrete, const std::vector<ElementSet>& series) {
  TowerBuild tb = tower_from_series(concrete, series);
  tb.tower.name = name;
  return BuiltinGroup{std::move(name), std::move(concrete), std::move(tb.tower), std::move(tb.to_tower)};
}

BuiltinGroup from_tower(std::string name, ExtensionTower t) {
  t.name = name;
  FiniteGroupTable concrete = t.group();
  std::vector<int> id(concrete.order());
  std::iota(id.begin(), id.end(), 0);
  return BuiltinGroup{std::move(name), std::move(concrete), std::move(t), std::move(id)};
}

BuiltinGroup cyclic_group(int n) {
  if (n < 1) throw InputError("Z(n): n must be positive");
  FiniteGroupTable t = cyclic_table(n);
  std::vector<ElementSet> series{t.full_set()};
  std::vector<ElementSet> chain;
  append_cyclic_chain(chain, n, n);
  series.insert(series.end(), chain.begin(), chain.end());
  return from_series("Z(" + std::to_string(n) + ")", std::move(t), series);
}

BuiltinGroup dihedral_group(int order) {
  if (order < 2 || order % 2) throw InputError("D(n): n must be even and positive");
  const int m = order / 2;
  FiniteGroupTable t = dihedral_table(m);
  std::vector<ElementSet> series{t.full_set(), cyclic_part_subgroup(order, m, 1)};
  append_cyclic_chain(series, order, m);
  return from_series("D(" + std::to_string(order) + ")", std::move(t), series);
}

BuiltinGroup binary_dihedral_group(int order, std::string name) {
  if (order < 4 || order % 4) throw InputError("Dstar(n): n must be a positive multiple of 4");
  const int m = order / 4;
  FiniteGroupTable t = binary_dihedral_table(m);
  std::vector<ElementSet> series{t.full_set(), cyclic_part_subgroup(order, 2 * m, 1)};
  append_cyclic_chain(series, order, 2 * m);
  return from_series(std::move(name), std::move(t), series);
}

// Extends generator images to a full monodromy table by walking the Cayley graph.
std::vector<ModMatrix> extend_monodromy(const FiniteGroupTable& base, const std::vector<int>& gens,
                                        const std::vector<ModMatrix>& images, int q) {
  const int n = base.order();
  const int s = static_cast<int>(images.front().rows());
  std::vector<ModMatrix> sigma(n);
  std::vector<char> seen(n, 0);
  sigma[0] = ModMatrix::Identity(s, s);
  seen[0] = 1;
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = base.mul(order[i], gens[k]);
      if (seen[y]) continue;
      seen[y] = 1;
      sigma[y] = mod_mul(sigma[order[i]], images[k], q);
      order.push_back(y);
    }
  if (static_cast<int>(order.size()) != n) throw InputError("monodromy generators do not generate the base");
  return sigma;
}

ElementaryLayer split_layer(const FiniteGroupTable& base, int q, std::vector<ModMatrix> sigma) {
  ElementaryLayer l;
  l.q = q;
  l.s = static_cast<int>(sigma.front().rows());
  l.sigma = std::move(sigma);
  l.chi.assign(static_cast<std::size_t>(base.order()) * base.order(), ModVector::Zero(l.s));
  return l;
}

ModMatrix mat2(int a, int b, int c, int d, int q) {
  ModMatrix m(2, 2);
  m << mod(a, q), mod(b, q), mod(c, q), mod(d, q);
  return m;
}

BuiltinGroup v_group(int q, int p, int r) {
  if (!is_prime(p) || p == 2) throw InputError("V(q,p,r): p must be an odd prime");
  if (!is_prime(q) || q == p) throw InputError("V(q,p,r): q must be a prime different from p");
  if (q % p == 1 || (static_cast<long>(q) * q) % p != 1) throw InputError("V(q,p,r): q must have order 2 mod p");
  BuiltinGroup d = dihedral_group(2 * p);
  ModMatrix sb = mat2(r, 1, -1, 0, q), sc = mat2(0, 1, 1, 0, q);
  ModMatrix pw = ModMatrix::Identity(2, 2);
  for (int k = 1; k <= p; ++k) {
    pw = mod_mul(pw, sb, q);
    if (pw.isIdentity() && k < p) throw InputError("V(q,p,r): sigma(b) must have order p in GL(2,q)");
  }
  if (!pw.isIdentity()) throw InputError("V(q,p,r): sigma(b) must have order p in GL(2,q)");
  const FiniteGroupTable& base = d.tower.group();
  std::vector<int> gens{d.to_tower[1], d.to_tower[p]};
  ExtensionTower t = d.tower;
  t.push_layer(split_layer(base, q, extend_monodromy(base, gens, {sb, sc}, q)));
  return from_tower("V(" + std::to_string(q) + "," + std::to_string(p) + "," + std::to_string(r) + ")", std::move(t));
}

BuiltinGroup a4_group() {
  BuiltinGroup z3 = cyclic_group(3);
  const FiniteGroupTable& base = z3.tower.group();
  ExtensionTower t = z3.tower;
  t.push_layer(split_layer(base, 2, extend_monodromy(base, {z3.to_tower[1]}, {mat2(1, 1, 1, 0, 2)}, 2)));
  return from_tower("A(4)", std::move(t));
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<int> parse_args(const std::string& args, const std::string& whole) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= args.size()) {
    std::size_t comma = args.find(',', start);
    std::string item = args.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("malformed group spec '" + whole + "': bad parameter '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

BuiltinGroup single_factor(const std::string& name, const std::vector<int>& a, const std::string& whole) {
  auto want = [&](std::size_t n) {
    if (a.size() != n) throw InputError("group spec '" + whole + "': " + name + " expects " + std::to_string(n) + " parameter(s)");
  };
  if (name == "z") {
    want(1);
    return cyclic_group(a[0]);
  }
  if (name == "d") {
    want(1);
    return dihedral_group(a[0]);
  }
  if (name == "dstar") {
    want(1);
    return binary_dihedral_group(a[0], "Dstar(" + std::to_string(a[0]) + ")");
  }
  if (name == "q") {
    want(1);
    if (a[0] < 8 || (a[0] & (a[0] - 1)) != 0) throw InputError("Q(n): n must be a power of 2, at least 8");
    return binary_dihedral_group(a[0], "Q(" + std::to_string(a[0]) + ")");
  }
  if (name == "s") {
    want(1);
    if (a[0] == 3) {
      BuiltinGroup g = dihedral_group(6);
      g.name = g.tower.name = "S(3)";
      return g;
    }
    if (a[0] == 4) {
      BuiltinGroup g = v_group(2, 3, 1);
      g.name = g.tower.name = "S(4)";
      return g;
    }
    throw InputError("S(n): only S(3) and S(4) are solvable symmetric groups in the catalog");
  }
  if (name == "a") {
    want(1);
    if (a[0] != 4) throw InputError("A(n): only A(4) is available");
    return a4_group();
  }
  if (name == "m") {
    want(3);
    FiniteGroupTable t = metacyclic_table(a[0], a[1], a[2]);
    TowerBuild tb = chief_series(t);
    std::string nm = "M(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    tb.tower.name = nm;
    return BuiltinGroup{nm, std::move(t), std::move(tb.tower), std::move(tb.to_tower)};
  }
  if (name == "v") {
    want(3);
    return v_group(a[0], a[1], a[2]);
  }
  throw InputError("group spec '" + whole + "': unknown family '" + name + "'");
}

}  // namespace

BuiltinGroup builtin_group_full(std::string_view spec, std::size_t cap) {
  const std::string whole(spec);
  const std::string s = lower(spec);
  if (s.empty()) throw InputError("empty group spec");
  std::vector<BuiltinGroup> factors;
  std::vector<std::string> display;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t open = s.find('(', pos);
    if (open == std::string::npos) throw InputError("malformed group spec '" + whole + "'");
    std::string name = s.substr(pos, open - pos);
    std::size_t close = s.find(')', open);
    if (close == std::string::npos) throw InputError("malformed group spec '" + whole + "': missing ')'");
    std::vector<int> args = parse_args(s.substr(open + 1, close - open - 1), whole);
    pos = close + 1;
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = pos + 1;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      auto [ptr, ec] = std::from_chars(s.data() + pos + 1, s.data() + end, power);
      if (ec != std::errc() || power < 1 || power > 16)
        throw InputError("malformed group spec '" + whole + "': bad power");
      pos = end;
    }
    BuiltinGroup g = single_factor(name, args, whole);
    for (int k = 0; k < power; ++k) {
      factors.push_back(g);
      display.push_back(g.name);
    }
    if (pos < s.size()) {
      if (s[pos] != '*') throw InputError("malformed group spec '" + whole + "' at position " + std::to_string(pos));
      ++pos;
      if (pos == s.size()) throw InputError("malformed group spec '" + whole + "': trailing '*'");
    }
  }
  if (factors.size() == 1) {
    if (static_cast<std::size_t>(factors[0].concrete.order()) > cap)
      throw CapExceeded("group order exceeds cap " + std::to_string(cap));
    return std::move(factors[0]);
  }
  long total = 1;
  for (const auto& f : factors) total *= f.concrete.order();
  if (static_cast<std::size_t>(total) > cap)
    throw CapExceeded("group order " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  FiniteGroupTable t = factors[0].concrete;
  for (std::size_t k = 1; k < factors.size(); ++k) t = direct_product(t, factors[k].concrete);
  std::string name;
  for (std::size_t k = 0; k < display.size(); ++k) name += (k ? "*" : "") + display[k];
  TowerBuild tb = chief_series(t, cap);
  tb.tower.name = name;
  return BuiltinGroup{name, std::move(t), std::move(tb.tower), std::move(tb.to_tower)};
}

ExtensionTower builtin_group(std::string_view spec, std::size_t cap) {
  return std::move(builtin_group_full(spec, cap).tower);
}

BuiltinGroup resolve_group(std::string_view spec, std::size_t cap) {
  std::string s(spec);
  std::string path;
  if (s.rfind("table:", 0) == 0)
    path = s.substr(6);
  else if (s.find('(') == std::string::npos && std::filesystem::exists(s))
    path = s;
  if (path.empty()) return builtin_group_full(spec, cap);
  FiniteGroupTable t = read_table_file(path);
  TowerBuild tb = chief_series(t, cap);
  tb.tower.name = "table:" + path;
  return BuiltinGroup{tb.tower.name, std::move(t), std::move(tb.tower), std::move(tb.to_tower)};
}

std::vector<std::string> catalog_specs(int max_order) {
  // (order, spec) pairs: solvable groups covering every family of the DSL.
  static const std::vector<std::pair<int, std::string>> all = {
      {1, "Z(1)"},          {2, "Z(2)"},           {3, "Z(3)"},         {4, "Z(4)"},
      {4, "Z(2)^2"},        {5, "Z(5)"},           {6, "Z(6)"},         {6, "S(3)"},
      {7, "Z(7)"},          {8, "Z(8)"},           {8, "Z(4)*Z(2)"},    {8, "Z(2)^3"},
      {8, "D(8)"},          {8, "Q(8)"},           {9, "Z(9)"},         {9, "Z(3)^2"},
      {10, "Z(10)"},        {10, "D(10)"},         {12, "Z(12)"},       {12, "Z(2)^2*Z(3)"},
      {12, "D(12)"},        {12, "Dstar(12)"},     {12, "A(4)"},        {14, "D(14)"},
      {16, "Z(16)"},        {16, "Z(4)^2"},        {16, "D(16)"},       {16, "Q(16)"},
      {16, "Z(2)*D(8)"},    {16, "Z(2)*Q(8)"},     {16, "Z(2)^4"},      {18, "D(18)"},
      {18, "Z(3)*S(3)"},    {20, "D(20)"},         {20, "Dstar(20)"},   {20, "M(5,4,2)"},
      {21, "M(7,3,2)"},     {24, "S(4)"},          {24, "A(4)*Z(2)"},   {24, "D(24)"},
      {24, "Dstar(24)"},    {24, "Q(8)*Z(3)"},     {24, "D(8)*Z(3)"},   {24, "Z(2)*Z(12)"},
      {27, "Z(3)^3"},       {27, "Z(9)*Z(3)"},     {32, "Q(32)"},       {32, "D(32)"},
      {32, "Z(2)*Q(16)"},   {36, "D(36)"},         {36, "Z(3)^2*Z(4)"}, {40, "Dstar(40)"},
      {42, "M(7,6,3)"},     {48, "S(4)*Z(2)"},     {48, "A(4)*Z(4)"},   {48, "D(48)"},
      {48, "Dstar(48)"},
  };
  std::vector<std::string> out;
  for (const auto& [o, spec] : all)
    if (o <= max_order) out.push_back(spec);
  return out;
}

}  // namespace solvcount
