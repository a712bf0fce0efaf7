#include <doctest.h>

#include <random>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/oracle.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/smith.hpp"

using namespace solvcount;

namespace {

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::string decl;
  for (const auto& n : names) decl += (decl.empty() ? "" : ", ") + n;
  return parse_presentation("< " + decl + " | " + text + " >").relators.at(0);
}

FreeGroupRingElement ring(const std::vector<std::pair<Word, int>>& terms) {
  FreeGroupRingElement e;
  for (const auto& [w, c] : terms) e.add(w, c);
  return e;
}

// Image of a group-ring element in Z[T] under x_i -> images[i].
std::vector<BigInt> push_forward(const FreeGroupRingElement& e, const FiniteGroupTable& t,
                                 const std::vector<int>& images) {
  std::vector<BigInt> out(t.order());
  for (const auto& [w, c] : e.terms()) {
    int g = 0;
    for (const Letter& l : w) g = t.mul(g, l.exp > 0 ? images[l.gen] : t.inv(images[l.gen]));
    out[g] += c;
  }
  return out;
}

Word random_word(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> gen(0, gens - 1), sign(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("parse_presentation expands powers, commutators and conjugates") {
  Presentation p = parse_presentation("< x, y | x y^3 x^-1 y^-2 >");
  CHECK(p.num_generators() == 2);
  REQUIRE(p.num_relators() == 1);
  CHECK(p.relators[0].size() == 7);

  Presentation c = parse_presentation("< x, y | [x, y] >");
  CHECK(c.relators[0] == Word{{0, -1}, {1, -1}, {0, 1}, {1, 1}});

  Presentation d8 = parse_presentation("< a, b | a^4, b^2, (b a)^2 >");
  REQUIRE(d8.num_relators() == 3);
  CHECK(d8.relators[0].size() == 4);
  CHECK(d8.relators[1].size() == 2);
  CHECK(d8.relators[2].size() == 4);

  Presentation conj = parse_presentation("< x, y | x^(y) ; (x y)^0 >");
  CHECK(conj.relators[0] == Word{{1, -1}, {0, 1}, {1, 1}});
  CHECK(conj.relators[1].empty());
}

TEST_CASE("parse_presentation rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation("< x | y >"), InputError);
  CHECK_THROWS_AS(parse_presentation("< x, y | x y"), InputError);
  CHECK_THROWS_AS(parse_presentation("< x | x^ >"), InputError);
  CHECK_THROWS_AS(builtin_presentation("bs", {3, 2}), InputError);
  CHECK_THROWS_AS(builtin_presentation("braid", {2}), InputError);
  CHECK_THROWS_AS(builtin_presentation("nosuch", {}), InputError);
}

TEST_CASE("print then parse is the identity") {
  for (const char* spec : {"free(2)", "bs(2,-4)", "parafree(2,3)", "surface(2)", "nonorientable(3)", "klein",
                           "braid(5)", "braid3_split", "braid4_split", "hillman_link"}) {
    Presentation p = builtin_presentation(spec);
    CHECK_MESSAGE(parse_presentation(to_string(p)) == p, spec);
  }
}

TEST_CASE("builtin presentations") {
  Presentation b3 = builtin_presentation("braid", {3});
  REQUIRE(b3.num_relators() == 1);
  CHECK(b3.relators[0] == parse_word("y^3 (y x)^-2", {"x", "y"}));
  CHECK(builtin_presentation("braid", {6}).num_relators() == 3);

  Presentation pf = builtin_presentation("parafree", {1, 1});
  CHECK(pf.num_generators() == 3);
  REQUIRE(pf.num_relators() == 1);
  CHECK(pf.relators[0].size() == 9);

  Presentation h = builtin_presentation("hillman_link", {});
  CHECK(h.num_generators() == 4);
  CHECK(h.num_relators() == 3);

  CHECK(resolve_presentation("builtin:klein") == builtin_presentation("klein", {}));
  CHECK(resolve_presentation("< x, y | y x y^-1 x >") == builtin_presentation("klein", {}));
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(Word{{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == Word{{0, 1}, {0, 1}});
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(Word{{0, -1}, {0, 1}}).empty());
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(rng, 3, 12), v = random_word(rng, 3, 12), w = random_word(rng, 3, 12);
    Word r = free_reduce(u);
    CHECK(free_reduce(r) == r);
    CHECK(word_concat(word_concat(u, v), w) == word_concat(u, word_concat(v, w)));
    CHECK(word_concat(r, Word{}) == r);
    CHECK(word_concat(r, word_inverse(r)).empty());
  }
}

TEST_CASE("fox derivatives") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(fox_derivative(parse_word("x y", xy), 0) == ring({{{}, 1}}));
  CHECK(fox_derivative(parse_word("x^-1", xy), 0) == ring({{{{0, -1}}, -1}}));

  // d(x y^m x^-1 y^-n)/dx = 1 - x y^m x^-1, checked for several m, n.
  for (int m = 1; m <= 3; ++m)
    for (int n = -4; n <= 4; ++n) {
      if (std::abs(n) < m) continue;
      Word r = builtin_presentation("bs", {m, n}).relators[0];
      Word conj = parse_word("x y^" + std::to_string(m) + " x^-1", xy);
      CHECK(fox_derivative(r, 0) == ring({{{}, 1}, {conj, -1}}));
    }
}

TEST_CASE("fox derivative augmentation and the fundamental identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int gens = 1 + trial % 3;
    Word w = free_reduce(random_word(rng, gens, 1 + trial % 30));
    FreeGroupRingElement sum;
    for (int j = 0; j < gens; ++j) {
      FreeGroupRingElement d = fox_derivative(w, j);
      CHECK(d.augmentation() == exponent_sum(w, j));
      sum += d * (FreeGroupRingElement::word({{j, 1}}) - FreeGroupRingElement::word({}));
    }
    CHECK(sum == FreeGroupRingElement::word(w) - FreeGroupRingElement::word({}));
  }
}

TEST_CASE("symbolic jacobians") {
  CHECK(symbolic_jacobian(builtin_presentation("free", {3})).empty());

  SymbolicJacobian k = symbolic_jacobian(builtin_presentation("klein", {}));
  REQUIRE(k.size() == 1);
  REQUIRE(k[0].size() == 2);
  CHECK(k[0][0].augmentation() == 2);
  CHECK(k[0][1].augmentation() == 0);

  // Parafree row: dr/dx agrees with 1 + x z^m - y z^n y^-1 z^-n in ZG, which
  // is checked through every homomorphism of G into S_4.
  for (auto [m, n] : {std::pair{1, 1}, {2, 3}}) {
    Presentation p = builtin_presentation("parafree", {m, n});
    SymbolicJacobian j = symbolic_jacobian(p);
    REQUIRE(j.size() == 1);
    REQUIRE(j[0].size() == 3);
    const std::vector<std::string> xyz{"x", "y", "z"};
    std::string ms = std::to_string(m), ns = std::to_string(n);
    FreeGroupRingElement expected = ring({{{}, 1},
                                          {parse_word("x z^" + ms, xyz), 1},
                                          {parse_word("y z^" + ns + " y^-1 z^-" + ns, xyz), -1}});
    FiniteGroupTable s4 = builtin_group_full("S(4)").concrete;
    auto homs = brute_hom_list(p, s4);
    REQUIRE(homs);
    REQUIRE(homs->size() > 24);
    for (const auto& images : *homs) CHECK(push_forward(j[0][0], s4, images) == push_forward(expected, s4, images));
  }
}

TEST_CASE("abelian invariants") {
  AbelianInvariants f2 = abelian_invariants(builtin_presentation("free", {2}));
  CHECK(f2.free_rank == 2);
  CHECK(f2.torsion.empty());

  AbelianInvariants bs = abelian_invariants(builtin_presentation("bs", {2, 4}));
  CHECK(bs.free_rank == 1);
  CHECK(bs.torsion_order() == 2);
  CHECK(bs.multiplicity(2, 1) == 1);

  CHECK(abelian_invariants(builtin_presentation("surface", {2})).free_rank == 4);
  AbelianInvariants nonor = abelian_invariants(builtin_presentation("nonorientable", {3}));
  CHECK(nonor.free_rank == 2);
  CHECK(nonor.torsion_order() == 2);
}

TEST_CASE("abelian invariants of Baumslag-Solitar groups against a Smith form") {
  for (long m = 1; m <= 6; ++m)
    for (long n = -6; n <= 6; ++n) {
      if (m > std::labs(n)) continue;
      AbelianInvariants inv = abelian_invariants(builtin_presentation("bs", {m, n}));
      // Abelianized relator: x-exponent 0, y-exponent m - n.
      DenseMatrix<long> rel(1, 2);
      rel << 0, m - n;
      std::vector<long> d = smith_invariants<long>(rel);
      const int rank = 2 - static_cast<int>(d.size());
      BigInt torsion = 1;
      for (long v : d) torsion *= v;
      CHECK(inv.free_rank == rank);
      CHECK(inv.torsion_order() == torsion);
      if (m == n) CHECK(inv.free_rank == 2);
      else CHECK(inv.torsion_order() == std::labs(n - m));
    }
}

TEST_CASE("smith invariants") {
  DenseMatrix<long> m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  CHECK(smith_invariants<long>(m) == std::vector<long>{2, 6, 12});
  DenseMatrix<BigInt> z = DenseMatrix<BigInt>::Zero(2, 3);
  CHECK(smith_invariants<BigInt>(z).empty());
}
