#include "solvcount/closed_forms.hpp"

#include <string>

#include "solvcount/cohomology.hpp"
#include "solvcount/parallel.hpp"

namespace solvcount {

namespace {

using boost::multiprecision::pow;

long posmod(long x, long m) { return ((x % m) + m) % m; }

// q^e for a possibly negative exponent.
BigRational rpow(long q, long e) {
  BigInt p = pow(BigInt(q), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? BigRational(1, p) : BigRational(p);
}

count_t exact(const BigRational& v, std::string_view what) {
  if (denominator(v) != 1) throw InternalInconsistency(std::string(what) + " is not an integer");
  return to_count(numerator(v));
}

std::vector<long> primes_of(long m, bool odd_only) {
  std::vector<long> out;
  for (auto [p, e] : factorize(m))
    if (!odd_only || p != 2) out.push_back(p);
  return out;
}

void need(const std::vector<long>& params, std::size_t k, std::string_view family) {
  if (params.size() != k)
    throw InputError(std::string(family) + " expects " + std::to_string(k) + " parameter(s)");
}

}  // namespace

count_t closed_form_eulerian(std::string_view family, const std::vector<long>& params, int n) {
  if (family == "dihedral" || family == "binary_dihedral") {
    need(params, 1, family);
    const long m = params[0];
    if (m < 1 || n < 0) throw InputError(std::string(family) + ": need m >= 1 and n >= 0");
    BigRational v = family == "dihedral" ? rpow(2, n) - 1 : rpow(4, n) - rpow(2, n);
    v *= rpow(m, n);
    for (long q : primes_of(m, false)) v *= 1 - rpow(q, 1 - n);
    return exact(v, family);
  }
  if (family == "surface" || family == "nonorientable") {
    need(params, 2, family);
    const long g = params[0], m = params[1];
    if (g < 1 || m < 1) throw InputError(std::string(family) + ": need g >= 1 and m >= 1");
    const std::vector<long> qs = primes_of(m, true);
    int k = 0;  // 2-adic valuation of m
    long odd = m;
    while (odd % 2 == 0) {
      odd /= 2;
      ++k;
    }
    if (family == "surface") {
      BigRational v = rpow(m, 2 * g - 1) * (rpow(2, 2 * g) - 1);
      if (k == 1) v *= 2 - rpow(2, 2 - 2 * g);
      if (k >= 2) v *= 2 - rpow(2, 3 - 2 * g);
      for (long q : qs) v *= 1 - rpow(q, 2 - 2 * g);
      return exact(v, family);
    }
    // m [F + (2^g - 2) H]: F from the orientation character, H from the
    // other 2^g - 2 characters.
    BigRational f = rpow(m, g - 1);
    for (long q : primes_of(m, false)) f *= 1 - rpow(q, 1 - g);
    BigRational h = rpow(odd, g - 2);
    for (long q : qs) h *= 1 - rpow(q, 2 - g);
    if (k == 1) h *= rpow(2, g - 1) - 1;
    if (k >= 2) h *= rpow(2, k * (g - 2) + 1) * (1 - rpow(2, 2 - g));
    return exact(BigRational(m) * (f + (rpow(2, g) - 2) * h), family);
  }
  throw InputError("unknown closed-form family '" + std::string(family) + "'");
}

count_t closed_form_delta(std::string_view family, const std::vector<long>& params) {
  if (family == "bs_d8" || family == "bs_q8" || family == "parafree_s4") {
    need(params, 2, family);
    const long m = params[0], n = params[1];
    if (family == "bs_d8") {
      if (m < 1 || std::abs(n) < m) throw InputError("bs_d8: need 0 < m <= |n|");
      const long r = posmod(n - m, 4);
      if (m % 2 == 0) return r == 0 ? 3 : r == 2 ? 2 : 0;
      return r == 2 ? 1 : 0;
    }
    if (family == "bs_q8") {
      if (m < 1 || std::abs(n) < m) throw InputError("bs_q8: need 0 < m <= |n|");
      return posmod(n - m, 2) == 0 && posmod(m + n, 4) == 0 ? 1 : 0;
    }
    if (m < 1 || n < 1) throw InputError("parafree_s4: need m, n >= 1");
    return m % 2 == 1 && posmod(m - n, 4) == 2 ? 17 : 9;
  }
  if (family == "braid_metabelian") {
    need(params, 3, family);
    const long type = params[0], r = params[1], k = params[2];
    switch (type) {
      case 1:
        if (r != 3 || (posmod(k, 6) != 2 && posmod(k, 6) != 4)) break;
        return 1;
      case 2:
        if (r <= 3 || posmod(k, 6) != 0) break;
        return 2;
      case 3:
        if (r != 2 || posmod(k, 6) != 3) break;
        return 1;
      case 4:
        if (r <= 3 || posmod(k, 6) != 0) break;
        return 1;
      default:
        break;
    }
    throw InputError("braid_metabelian: parameters outside the classification");
  }
  if (family == "braid_solvable") {
    need(params, 2, family);
    if (params[0] < 5) throw InputError("braid_solvable: need n >= 5");
    return params[1] ? 1 : 0;
  }
  throw InputError("unknown closed-form family '" + std::string(family) + "'");
}

// ---------------------------------------------------------------------------
// Recursions through the quotients by <a^d>

FiniteGroupTable cyclic_by_two_table(int d, int t) {
  const int n = 2 * d;
  std::vector<std::int32_t> tab(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = x % d, v = x / d, s = y % d, w = y / d;
      long uu = u + (v ? -s : s) + (v && w ? t : 0);
      tab[static_cast<std::size_t>(x) * n + y] = static_cast<int>(posmod(uu, d)) + d * ((v + w) % 2);
    }
  return FiniteGroupTable(n, std::move(tab));
}

// For t = 0 this is the dihedral cocycle; for 2-power quaternion quotients it
// reduces to k + [v = w = 1].
ElementaryLayer cyclic_by_two_layer(int l, int q, int t_big) {
  const int d = q * l, n = 2 * l;
  ElementaryLayer layer;
  layer.q = q;
  layer.s = 1;
  for (int x = 0; x < n; ++x) {
    ModMatrix m(1, 1);
    m(0, 0) = x / l ? q - 1 : 1;
    m(0, 0) %= q;
    layer.sigma.push_back(m);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = x % l, v = x / l, s = y % l, w = y / l;
      long big = posmod(u + (v ? -s : s) + (v && w ? t_big : 0), d);
      ModVector c(1);
      c(0) = static_cast<int>(big / l);
      layer.chi.push_back(c);
    }
  return layer;
}

namespace {

struct RecursionStep {
  int q;
  int l;      // cyclic part before the step
  bool split; // from the case split of the recursion
};

count_t cyclic_by_two_recursion(const Presentation& p, int cyc, int m_twist, bool binary, const CountOptions& opt) {
  const int n = p.num_generators();
  // Epi(G, Z_2): b^v images.
  std::vector<std::vector<int>> frontier;
  {
    std::vector<int> im(n, 0);
    for (long code = 1; code < (1L << n); ++code) {
      for (int i = 0; i < n; ++i) im[i] = (code >> i) & 1;
      bool ok = true;
      for (const Word& r : p.relators) {
        long sum = 0;
        for (const Letter& lt : r) sum += im[lt.gen];
        ok = ok && sum % 2 == 0;
      }
      if (ok) frontier.push_back(im);
    }
  }
  // Steps l -> q l along the primes of cyc, ascending.
  std::vector<RecursionStep> steps;
  int l = 1;
  for (auto [q, e] : factorize(cyc))
    for (int k = 0; k < e; ++k) {
      bool split = l % q != 0;
      if (binary && q == 2) {
        const int t_big = static_cast<int>(posmod(m_twist, 2 * l));
        split = l == 1 && t_big == 0;
      }
      steps.push_back({static_cast<int>(q), l, split});
      l *= static_cast<int>(q);
    }
  for (const RecursionStep& st : steps) {
    const int d = st.q * st.l;
    const int t_small = binary ? static_cast<int>(posmod(m_twist, st.l)) : 0;
    const int t_big = binary ? static_cast<int>(posmod(m_twist, d)) : 0;
    FiniteGroupTable base = cyclic_by_two_table(st.l, t_small), big = cyclic_by_two_table(d, t_big);
    ElementaryLayer layer = cyclic_by_two_layer(st.l, st.q, t_big);
    struct Out {
      count_t formula = 0;
      std::vector<std::vector<int>> maps;
    };
    std::vector<Out> parts = parallel_map<Out>(frontier.size(), opt.threads, [&](std::size_t r) {
      Out out;
      // Images as a^u b^v in the smaller quotient, index u + l v.
      const std::vector<int>& rho = frontier[r];
      LayerSolution sol = solve_layer_system(build_system(p, base, layer, rho), st.q);
      const count_t qd = ipow(st.q, static_cast<unsigned>(sol.d));
      out.formula = st.split ? qd - st.q : (sol.solvable ? qd : 0);
      if (!sol.solvable) return out;
      std::vector<int> coeff(sol.kernel.size(), 0), images(n);
      while (true) {
        IntVector x = sol.witness;
        for (std::size_t k = 0; k < coeff.size(); ++k)
          if (coeff[k]) x += coeff[k] * sol.kernel[k];
        for (int i = 0; i < n; ++i) {
          int u = rho[i] % st.l, v = rho[i] / st.l;
          images[i] = u + st.l * static_cast<int>(mod_reduce(x(i), st.q)) + d * v;
        }
        require(is_homomorphism(p, big, images), "recursion lift is not a homomorphism");
        if (generates(big, images)) out.maps.push_back(images);
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == st.q) coeff[k++] = 0;
        if (k == coeff.size()) break;
      }
      require(out.maps.size() == out.formula, "recursion formula " + std::to_string(out.formula) + " differs from " +
                                                  std::to_string(out.maps.size()) + " surjective lifts");
      return out;
    });
    std::vector<std::vector<int>> next;
    for (Out& o : parts)
      for (auto& mp : o.maps) next.push_back(std::move(mp));
    if (next.size() > opt.frontier_cap) throw CapExceeded("recursion frontier exceeds cap");
    frontier = std::move(next);
  }
  return frontier.size();
}

}  // namespace

count_t epi_count_dihedral_recursion(const Presentation& p, int m, const CountOptions& opt) {
  if (m < 1) throw InputError("dihedral recursion needs m >= 1");
  return cyclic_by_two_recursion(p, m, 0, false, opt);
}

count_t epi_count_binary_dihedral_recursion(const Presentation& p, int m, const CountOptions& opt) {
  if (m < 1) throw InputError("binary dihedral recursion needs m >= 1");
  return cyclic_by_two_recursion(p, 2 * m, m, true, opt);
}

}  // namespace solvcount
