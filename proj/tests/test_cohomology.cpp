#include <doctest.h>

#include <random>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/cohomology.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/oracle.hpp"

using namespace solvcount;

namespace {

std::vector<std::vector<int>> epis_onto(const Presentation& p, const FiniteGroupTable& t) {
  std::vector<std::vector<int>> out;
  auto homs = brute_hom_list(p, t);
  for (auto& images : homs.value())
    if (generates(t, images)) out.push_back(images);
  return out;
}

IntMatrix scalar(std::int64_t v) {
  IntMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

CocycleSystem make_system(std::vector<std::int64_t> moduli, int relators, int generators, IntMatrix m) {
  CocycleSystem s;
  s.moduli = std::move(moduli);
  s.relators = relators;
  s.generators = generators;
  s.matrix = std::move(m);
  s.rhs = IntVector::Zero(s.matrix.rows());
  return s;
}

BigInt power(long q, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

TEST_CASE("evaluate_ring_element") {
  TwistedAction triv = TwistedAction::trivial({3, 3}, 2);
  IntMatrix one = evaluate_ring_element(FreeGroupRingElement::word({}), triv);
  CHECK(one == triv.identity());

  FreeGroupRingElement xm1 = FreeGroupRingElement::word({{1, 1}}) - FreeGroupRingElement::word({});
  CHECK(evaluate_ring_element(xm1, triv).isZero());

  // 1 - x y^2 x^-1 with x, y acting as -1 on Z_3.
  TwistedAction neg({3}, {scalar(2), scalar(2)});
  FreeGroupRingElement e =
      FreeGroupRingElement::word({}) - FreeGroupRingElement::word({{0, 1}, {1, 1}, {1, 1}, {0, -1}});
  CHECK(evaluate_ring_element(e, neg).isZero());

  CHECK_THROWS_AS(TwistedAction({4}, {scalar(2)}), InputError);
}

TEST_CASE("homogeneous systems") {
  Presentation f3 = builtin_presentation("free", {3});
  CocycleSystem empty = build_system(f3, TwistedAction::trivial({3, 3}, 3));
  CHECK(empty.matrix.rows() == 0);
  CHECK(homogeneous_count(empty).log.at(3) == 6);

  IntMatrix k(2, 4);
  k << 1, 0, 0, 1, 0, 0, 1, 1;
  SolutionCount klein = homogeneous_count(make_system({2, 2}, 1, 2, k));
  CHECK(klein.log.at(2) == 2);
  CHECK(klein.total() == 4);

  CHECK(homogeneous_count(make_system({4}, 1, 1, scalar(2))).total() == 2);
}

TEST_CASE("homogeneous count matches exhaustive enumeration") {
  std::mt19937 rng(5);
  const std::vector<std::vector<std::int64_t>> shapes{{2}, {4}, {8}, {3}, {9}, {2, 2}, {2, 4}, {3, 9}, {2, 3}, {4, 3}};
  for (const auto& moduli : shapes)
    for (int gens = 1; gens <= 3; ++gens) {
      count_t size = 1;
      for (int g = 0; g < gens; ++g)
        for (auto m : moduli) size *= m;
      if (size > 6561) continue;
      for (int trial = 0; trial < 15; ++trial) {
        const int dim = static_cast<int>(moduli.size());
        const int rels = 1 + trial % 3;
        IntMatrix m(rels * dim, gens * dim);
        for (int r = 0; r < m.rows(); ++r)
          for (int c = 0; c < m.cols(); ++c) m(r, c) = std::uniform_int_distribution<int>(0, 11)(rng);
        CocycleSystem s = make_system(moduli, rels, gens, m);
        // Keep every row entry a valid homomorphism between the cyclic factors.
        auto rm = s.row_moduli();
        auto cm = s.col_moduli();
        for (int r = 0; r < m.rows(); ++r)
          for (int c = 0; c < m.cols(); ++c) {
            std::int64_t g = std::gcd(rm[r], cm[c]);
            s.matrix(r, c) = (s.matrix(r, c) % g) * (rm[r] / g) % rm[r];
          }
        CHECK(homogeneous_count(s).total() == homogeneous_count_exhaustive(s));
      }
    }
}

TEST_CASE("Z^1 is multiplicative over primes") {
  for (const char* spec : {"klein", "bs(2,4)", "braid(3)", "surface(2)"}) {
    Presentation p = builtin_presentation(spec);
    const int n = p.num_generators();
    BigInt z6 = analyze(p, TwistedAction::trivial({2, 3}, n)).z1;
    BigInt z12 = analyze(p, TwistedAction::trivial({4, 3}, n)).z1;
    BigInt z2 = analyze(p, TwistedAction::trivial({2}, n)).z1;
    BigInt z3 = analyze(p, TwistedAction::trivial({3}, n)).z1;
    BigInt z4 = analyze(p, TwistedAction::trivial({4}, n)).z1;
    CHECK_MESSAGE(z6 == z2 * z3, spec);
    CHECK_MESSAGE(z12 == z4 * z3, spec);
  }
}

TEST_CASE("epsilon and witness") {
  Presentation f2 = builtin_presentation("free", {2});
  ExtensionTower s4 = builtin_group("S(4)");
  EpsilonWitness ew = epsilon_and_witness(build_system(f2, s4.level(2), s4.layer(2), {1, 2}));
  CHECK(ew.epsilon == 1);
  REQUIRE(ew.witness);
  CHECK(ew.witness->isZero());

  // BS(1,3) through the central layer of D_8 (resp. Q_8) over Z_2^2.
  Presentation bs = builtin_presentation("bs", {1, 3});
  for (auto [spec, liftable] : {std::pair{"D(8)", 2}, {"Q(8)", 6}}) {
    ExtensionTower t = builtin_group(spec);
    auto rhos = epis_onto(bs, t.level(2));
    CHECK(rhos.size() == 6);
    int eps = 0;
    for (const auto& rho : rhos) {
      CohomologyReport r = analyze_lift(bs, t.level(2), t.layer(2), rho);
      eps += r.epsilon;
      CHECK(r.witness.has_value() == (r.epsilon == 1));
      if (r.witness) {
        std::vector<ModVector> values;
        for (int i = 0; i < 2; ++i) values.push_back(ModVector::Constant(1, static_cast<int>((*r.witness)(i))));
        CHECK(brute_lift_check(bs, t.level(2), t.layer(2), rho, values));
      }
    }
    CHECK_MESSAGE(eps == liftable, spec);
  }
}

TEST_CASE("H^1 dimensions") {
  ExtensionTower s4 = builtin_group("S(4)");
  for (int n = 2; n <= 3; ++n) {
    Presentation fn = builtin_presentation("free", {n});
    for (const auto& rho : epis_onto(fn, s4.level(2))) CHECK(h1_dim(fn, s4.level(2), s4.layer(2), rho) == 2 * n - 2);
  }
  Presentation b3 = builtin_presentation("braid", {3});
  auto rhos = epis_onto(b3, s4.level(2));
  CHECK(rhos.size() == 6);
  for (const auto& rho : rhos) CHECK(h1_dim(b3, s4.level(2), s4.layer(2), rho) == 1);

  ExtensionTower z2 = builtin_group("Z(2)");
  CHECK(h1_dim(builtin_presentation("free", {2}), z2.level(0), z2.layer(0), {0, 0}) == 2);
}

TEST_CASE("Z^1 = B^1 H^1 with B^1 = E^zeta for surjective rho") {
  for (const char* source : {"free(2)", "bs(1,3)", "klein", "braid(3)"}) {
    Presentation p = builtin_presentation(source);
    for (const std::string& spec : catalog_specs(24)) {
      ExtensionTower t = builtin_group(spec);
      for (int i = 0; i < t.depth(); ++i) {
        const ElementaryLayer& l = t.layer(i);
        for (const auto& rho : epis_onto(p, t.level(i))) {
          CohomologyReport r = analyze_lift(p, t.level(i), l, rho);
          BigInt h1 = 1;
          for (auto [q, e] : r.h1) h1 *= power(q, e);
          CHECK(r.z1 == r.b1 * h1);
          CHECK(r.b1 == power(l.q, l.s * t.constants(i).zeta));
        }
      }
    }
  }
}

TEST_CASE("finite-source Z^1") {
  ExtensionTower v = builtin_group("Z(2)^2");
  CHECK(finite_source_z1(v.level(1), v.layer(1)) == 2);
  ExtensionTower s4 = builtin_group("S(4)");
  CHECK(finite_source_z1(s4.level(2), s4.layer(2)) == 4);
  ExtensionTower s3 = builtin_group("S(3)");
  CHECK(finite_source_z1(s3.level(1), s3.layer(1)) == 3);
}
