#include "solvcount/subgrowth.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/closed_forms.hpp"
#include "solvcount/cohomology.hpp"
#include "solvcount/parallel.hpp"

namespace solvcount {

namespace {

constexpr int kMaxDegree = 10;
using Perm = std::array<std::uint8_t, kMaxDegree>;

struct Letter2 {
  int slot;  // position in the assignment order
  bool inverse;
};

struct SymmetricSearch {
  int k = 0;
  std::vector<Perm> perms, inverses;
  std::vector<std::vector<std::vector<Letter2>>> checks;  // by depth
  int depth = 0;

  bool holds(const std::vector<Letter2>& rel, const std::vector<int>& chosen) const {
    for (int p = 0; p < k; ++p) {
      int x = p;
      for (const Letter2& lt : rel) x = (lt.inverse ? inverses : perms)[chosen[lt.slot]][x];
      if (x != p) return false;
    }
    return true;
  }

  count_t descend(std::vector<int>& chosen, int level) const {
    if (level == depth) return 1;
    count_t total = 0;
    for (std::size_t c = 0; c < perms.size(); ++c) {
      chosen[level] = static_cast<int>(c);
      bool ok = true;
      for (const auto& rel : checks[level])
        if (!holds(rel, chosen)) {
          ok = false;
          break;
        }
      if (ok) total += descend(chosen, level + 1);
    }
    return total;
  }
};

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

count_t factorial(int k) {
  count_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

count_t hom_count_symmetric(const Presentation& p, int k, const GrowthOptions& opt) {
  if (k < 1) throw InputError("degree must be positive");
  if (k > opt.max_degree || k > kMaxDegree)
    throw CapExceeded("symmetric degree " + std::to_string(k) + " exceeds cap " + std::to_string(opt.max_degree));
  const int n = p.num_generators();
  std::vector<int> occurrences(n, 0);
  for (const Word& r : p.relators)
    for (const Letter& lt : r) ++occurrences[lt.gen];
  std::vector<int> order;
  for (int g = 0; g < n; ++g)
    if (occurrences[g]) order.push_back(g);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return occurrences[a] > occurrences[b]; });
  const count_t kf = factorial(k);
  const count_t free_factor = ipow(kf, static_cast<unsigned>(n - static_cast<int>(order.size())));
  if (order.empty()) return free_factor;

  SymmetricSearch search;
  search.k = k;
  search.depth = static_cast<int>(order.size());
  {
    Perm id{};
    std::iota(id.begin(), id.begin() + k, 0);
    do {
      search.perms.push_back(id);
    } while (std::next_permutation(id.begin(), id.begin() + k));
    for (const Perm& q : search.perms) {
      Perm inv{};
      for (int i = 0; i < k; ++i) inv[q[i]] = static_cast<std::uint8_t>(i);
      search.inverses.push_back(inv);
    }
  }
  std::vector<int> slot(n, -1);
  for (int i = 0; i < search.depth; ++i) slot[order[i]] = i;
  search.checks.assign(search.depth, {});
  for (const Word& r : p.relators) {
    if (r.empty()) continue;
    std::vector<Letter2> rel;
    int last = 0;
    for (const Letter& lt : r) {
      rel.push_back({slot[lt.gen], lt.exp < 0});
      last = std::max(last, slot[lt.gen]);
    }
    search.checks[last].push_back(std::move(rel));
  }

  // Class representatives of S_k for the first generator.
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(k, k, cur, parts);
  std::vector<int> rep_index;
  std::vector<count_t> class_size;
  {
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < search.perms.size(); ++i) index[search.perms[i]] = static_cast<int>(i);
    for (const auto& part : parts) {
      Perm rep{};
      int start = 0;
      std::map<int, int> mult;
      for (int len : part) {
        for (int j = 0; j < len; ++j) rep[start + j] = static_cast<std::uint8_t>(start + (j + 1) % len);
        start += len;
        ++mult[len];
      }
      count_t denom = 1;
      for (auto [len, c] : mult) denom *= ipow(len, c) * factorial(c);
      rep_index.push_back(index.at(rep));
      class_size.push_back(kf / denom);
    }
  }
  const double candidates =
      static_cast<double>(rep_index.size()) * std::pow(static_cast<double>(kf), search.depth - 1);
  if (candidates > 2e9) throw CapExceeded("symmetric search space too large for degree " + std::to_string(k));

  // Tasks: class representative times a slice of the second generator's images.
  const std::size_t slices = search.depth >= 2 ? 64 : 1;
  const std::size_t slice_len = (search.perms.size() + slices - 1) / slices;
  std::vector<count_t> parts_count =
      parallel_map<count_t>(rep_index.size() * slices, opt.threads, [&](std::size_t task) -> count_t {
        std::vector<int> chosen(search.depth, 0);
        chosen[0] = rep_index[task / slices];
        for (const auto& rel : search.checks[0])
          if (!search.holds(rel, chosen)) return 0;
        if (search.depth == 1) return 1;
        count_t sum = 0;
        const std::size_t lo = (task % slices) * slice_len, hi = std::min(search.perms.size(), lo + slice_len);
        for (std::size_t c = lo; c < hi; ++c) {
          chosen[1] = static_cast<int>(c);
          bool ok = true;
          for (const auto& rel : search.checks[1]) ok = ok && search.holds(rel, chosen);
          if (ok) sum += search.descend(chosen, 2);
        }
        return sum;
      });
  count_t total = 0;
  for (std::size_t task = 0; task < parts_count.size(); ++task)
    total = checked_add(total, checked_mul(parts_count[task], class_size[task / slices]));
  return checked_mul(total, free_factor);
}

std::vector<count_t> hall_recursion(const std::vector<count_t>& h) {
  std::vector<count_t> a;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    BigRational v(BigInt(h[k - 1]), BigInt(factorial(static_cast<int>(k) - 1)));
    for (std::size_t l = 1; l < k; ++l)
      v -= BigRational(BigInt(h[k - l - 1]) * a[l - 1], BigInt(factorial(static_cast<int>(k - l))));
    if (denominator(v) != 1 || v < 0) throw InternalInconsistency("Hall recursion gives a non-integer a_" + std::to_string(k));
    a.push_back(to_count(numerator(v)));
  }
  return a;
}

GrowthReport ak_sequence(const Presentation& p, int kmax, const GrowthOptions& opt) {
  if (kmax < 1) throw InputError("kmax must be positive");
  GrowthReport out;
  for (int k = 1; k <= kmax; ++k) {
    auto start = std::chrono::steady_clock::now();
    out.h.push_back(hom_count_symmetric(p, k, opt));
    out.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  out.a = hall_recursion(out.h);
  for (int k = 1; k <= kmax; ++k) out.t.push_back(checked_mul(out.a[k - 1], factorial(k - 1)));
  require(out.a[0] == 1, "a_1 must be 1");
  return out;
}

// ---------------------------------------------------------------------------
// Abelian closed forms

namespace {

BigInt bpow(long p, long e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

count_t exact_quotient(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0 || num % den != 0) throw InternalInconsistency(what + " is not an integer");
  return to_count(num / den);
}

}  // namespace

count_t delta_abelian_closed(const AbelianInvariants& inv, const AbelianShape& shape) {
  const long p = shape.p;
  const int s = shape.s, n = inv.free_rank;
  if (!is_prime(p) || s < 1) throw InputError("abelian shape needs a prime p and s >= 1");
  // |Epi(G, Z_{p^s})|; torsion exponents are capped at s.
  auto cyclic_epi = [&] {
    return bpow(p, static_cast<long>(s) * n + inv.alpha_capped(p, s)) -
           bpow(p, static_cast<long>(s - 1) * n + inv.alpha_capped(p, s - 1));
  };
  const long nb = n + inv.beta(p);
  switch (shape.kind) {
    case AbelianShape::Kind::cyclic:
      return exact_quotient(cyclic_epi(), bpow(p, s) - bpow(p, s - 1), "delta of Z_p^s");
    case AbelianShape::Kind::elementary: {
      BigInt num = 1, den = 1;
      for (int i = 0; i < s; ++i) {
        num *= bpow(p, nb) - bpow(p, i);
        den *= bpow(p, s) - bpow(p, i);
      }
      return exact_quotient(num, den, "delta of Z_p^+s");
    }
    case AbelianShape::Kind::mixed:
      if (s < 2) throw InputError("Z_p + Z_p^s needs s >= 2");
      return exact_quotient(cyclic_epi() * (bpow(p, nb) - p), bpow(p, s + 1) * (p - 1) * (p - 1),
                            "delta of Z_p + Z_p^s");
  }
  return 0;
}

std::optional<count_t> delta_abelian_closed(const AbelianInvariants& inv, const std::vector<long>& factors) {
  std::map<long, std::vector<int>> primary;  // p -> exponents
  for (long f : factors)
    for (auto [p, e] : factorize(f)) primary[p].push_back(e);
  count_t total = 1;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end());
    AbelianShape shape;
    shape.p = p;
    if (es.size() == 1) {
      shape.kind = AbelianShape::Kind::cyclic;
      shape.s = es[0];
    } else if (es.back() == 1) {
      shape.kind = AbelianShape::Kind::elementary;
      shape.s = static_cast<int>(es.size());
    } else if (es.size() == 2 && es[0] == 1) {
      shape.kind = AbelianShape::Kind::mixed;
      shape.s = es[1];
    } else {
      return std::nullopt;
    }
    total = checked_mul(total, delta_abelian_closed(inv, shape));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Normal subgroups of small index

namespace {

struct SmallGroup {
  const char* spec;
  std::vector<long> abelian;  // invariant factors; empty if non-abelian
};

const std::vector<SmallGroup>& small_groups() {
  static const std::vector<SmallGroup> groups = {
      {"Z(2)", {2}},          {"Z(3)", {3}},        {"Z(4)", {4}},          {"Z(2)^2", {2, 2}},
      {"Z(5)", {5}},          {"Z(6)", {6}},        {"S(3)", {}},           {"Z(7)", {7}},
      {"Z(8)", {8}},          {"Z(2)*Z(4)", {2, 4}}, {"Z(2)^3", {2, 2, 2}},  {"D(8)", {}},
      {"Q(8)", {}},           {"Z(9)", {9}},        {"Z(3)^2", {3, 3}},     {"Z(10)", {10}},
      {"D(10)", {}},          {"Z(11)", {11}},      {"Z(12)", {12}},        {"Z(2)*Z(6)", {2, 6}},
      {"D(12)", {}},          {"Dstar(12)", {}},    {"A(4)", {}},           {"Z(13)", {13}},
      {"Z(14)", {14}},        {"D(14)", {}},        {"Z(15)", {15}},
  };
  return groups;
}

int spec_order(const SmallGroup& g) {
  if (!g.abelian.empty()) return static_cast<int>(std::accumulate(g.abelian.begin(), g.abelian.end(), 1L, std::multiplies<>()));
  return builtin_group(g.spec).order();
}

}  // namespace

std::vector<std::string> groups_of_order(int k) {
  if (k < 1 || k > 15) throw InputError("order catalog covers 1..15");
  std::vector<std::string> out;
  for (const SmallGroup& g : small_groups())
    if (spec_order(g) == k) out.push_back(g.spec);
  return out;
}

count_t ak_normal(const Presentation& p, int k, const CountOptions& opt) {
  if (k < 1 || k > 15) throw InputError("a_k^normal is available for k <= 15");
  if (k == 1) return 1;
  const AbelianInvariants inv = abelian_invariants(p);
  count_t total = 0;
  for (const SmallGroup& g : small_groups()) {
    if (spec_order(g) != k) continue;
    std::optional<count_t> d;
    if (!g.abelian.empty()) d = delta_abelian_closed(inv, g.abelian);
    if (!d) d = *delta(p, builtin_group(g.spec), opt).delta;
    total = checked_add(total, *d);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Hall invariants from twisted H^1

namespace {

// Epi(G, Z_{m_1} + ... + Z_{m_r}): per generator, its coordinates.
std::vector<std::vector<std::vector<int>>> abelian_epis(const Presentation& p, const std::vector<int>& moduli) {
  const int n = p.num_generators(), r = static_cast<int>(moduli.size());
  int order = 1;
  for (int m : moduli) order *= m;
  if (std::pow(static_cast<double>(order), n) > 1e7) throw CapExceeded("abelian quotient enumeration too large");
  std::vector<std::vector<int>> sums;  // relator exponent sums
  for (const Word& w : p.relators) {
    std::vector<int> e(n, 0);
    for (const Letter& lt : w) e[lt.gen] += lt.exp;
    sums.push_back(e);
  }
  auto decode = [&](int code) {
    std::vector<int> c(r);
    for (int j = 0; j < r; ++j) {
      c[j] = code % moduli[j];
      code /= moduli[j];
    }
    return c;
  };
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> codes(n, 0);
  while (true) {
    std::vector<std::vector<int>> im(n);
    for (int i = 0; i < n; ++i) im[i] = decode(codes[i]);
    bool ok = true;
    for (const auto& e : sums)
      for (int j = 0; j < r && ok; ++j) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long>(e[i]) * im[i][j];
        ok = s % moduli[j] == 0;
      }
    if (ok) {
      // Subgroup generated, by closure under adding generator images.
      std::vector<char> in(order, 0);
      std::vector<int> stack{0};
      in[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        std::vector<int> x = decode(stack.back());
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
          int code = 0, mul = 1;
          for (int j = 0; j < r; ++j) {
            code += ((x[j] + im[i][j]) % moduli[j]) * mul;
            mul *= moduli[j];
          }
          if (!in[code]) {
            in[code] = 1;
            ++reached;
            stack.push_back(code);
          }
        }
      }
      if (reached == order) out.push_back(im);
    }
    int i = 0;
    while (i < n && ++codes[i] == order) codes[i++] = 0;
    if (i == n) break;
  }
  return out;
}

int h1_at(const Presentation& p, const TwistedAction& act, long q) {
  CohomologyReport rep = analyze(p, act);
  auto it = rep.h1.find(q);
  return it == rep.h1.end() ? 0 : it->second;
}

TwistedAction scalar_action(int q, const std::vector<int>& signs) {
  std::vector<ModMatrix> mats;
  for (int s : signs) {
    ModMatrix m(1, 1);
    m(0, 0) = s < 0 ? q - 1 : 1;
    mats.push_back(m);
  }
  return TwistedAction::elementary(q, 1, mats);
}

// Sum over Epi(G, A) of (3^h1 - 1), a generator acting on Z_3 by -1 when its
// first coordinate is odd.
BigInt sign_twisted_sum(const Presentation& p, const std::vector<int>& moduli) {
  BigInt sum = 0;
  for (const auto& im : abelian_epis(p, moduli)) {
    std::vector<int> signs;
    for (const auto& c : im) signs.push_back(c[0] % 2 ? -1 : 1);
    sum += bpow(3, h1_at(p, scalar_action(3, signs), 3)) - 1;
  }
  return sum;
}

}  // namespace

count_t delta_cohomological(const Presentation& p, const std::string& name, const CountOptions& opt) {
  const int n = p.num_generators();
  if (name == "S3") return exact_quotient(sign_twisted_sum(p, {2}), 2, "delta_S3");
  if (name == "D12") return exact_quotient(sign_twisted_sum(p, {2, 2}), 4, "delta_D12");
  if (name == "Dstar12") return exact_quotient(sign_twisted_sum(p, {4}), 4, "delta_Dstar12");
  if (name == "D8" || name == "Q8") {
    const FiniteGroupTable base = cyclic_by_two_table(2, 0);
    const ElementaryLayer layer = cyclic_by_two_layer(2, 2, name == "D8" ? 0 : 2);
    const int h1 = h1_at(p, TwistedAction::trivial({2}, n), 2);
    BigInt sum = 0;
    for (const auto& im : abelian_epis(p, {2, 2})) {
      std::vector<int> images;
      for (const auto& c : im) images.push_back(c[0] + 2 * c[1]);
      sum += epsilon_and_witness(build_system(p, base, layer, images)).epsilon * bpow(2, h1);
    }
    return exact_quotient(sum, name == "D8" ? 8 : 24, "delta_" + name);
  }
  if (name == "A4") {
    ModMatrix m(2, 2);
    m << 0, 1, 1, 1;
    const ModMatrix m2 = mod_mul(m, m, 2);
    BigInt sum = 0;
    for (const auto& im : abelian_epis(p, {3})) {
      std::vector<ModMatrix> mats;
      for (const auto& c : im) mats.push_back(c[0] == 0 ? ModMatrix::Identity(2, 2) : c[0] == 1 ? m : m2);
      sum += bpow(2, h1_at(p, TwistedAction::elementary(2, 2, mats), 2)) - 1;
    }
    return exact_quotient(sum, 6, "delta_A4");
  }
  if (name == "S4") return exact_quotient(BigInt(epi_count_q2p(p, 2, 3, 1, opt)), 24, "delta_S4");
  throw InputError("no cohomological formula for '" + name + "'");
}

LowIndexDeltas low_index_via_deltas(const Presentation& p, const CountOptions& opt) {
  const AbelianInvariants inv = abelian_invariants(p);
  LowIndexDeltas out;
  auto& d = out.deltas;
  d["Z2"] = delta_abelian_closed(inv, {AbelianShape::Kind::cyclic, 2, 1});
  d["Z3"] = delta_abelian_closed(inv, {AbelianShape::Kind::cyclic, 3, 1});
  d["Z4"] = delta_abelian_closed(inv, {AbelianShape::Kind::cyclic, 2, 2});
  d["Z2^2"] = delta_abelian_closed(inv, {AbelianShape::Kind::elementary, 2, 2});
  for (const char* name : {"S3", "D8", "A4", "S4"}) d[name] = delta_cohomological(p, name, opt);
  out.a2 = d["Z2"];
  out.a3 = checked_add(d["Z3"], checked_mul(3, d["S3"]));
  const BigInt z2 = d["Z2"];
  BigInt a4 = z2 * (1 - z2) / 2 + d["Z4"] + 4 * BigInt(d["Z2^2"]) + 4 * BigInt(d["D8"]) + 4 * BigInt(d["A4"]) +
              4 * BigInt(d["S4"]);
  out.a4 = to_count(a4);
  return out;
}

}  // namespace solvcount
