#include <doctest.h>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/subgrowth.hpp"

using namespace solvcount;

namespace {

Presentation src(const char* spec) { return builtin_presentation(spec); }

count_t tower_delta(const Presentation& p, const std::string& target) {
  return *delta(p, builtin_group(target)).delta;
}

count_t factorial(int k) {
  count_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("homomorphisms into symmetric groups") {
  CHECK(hom_count_symmetric(src("braid(3)"), 2) == 2);
  CHECK(hom_count_symmetric(src("braid(3)"), 3) == 12);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k) {
      std::string f = "free(" + std::to_string(n) + ")";
      CHECK(hom_count_symmetric(src(f.c_str()), k) == ipow(factorial(k), n));
    }
  CHECK(hom_count_symmetric(src("braid(3)"), 4) == hom_count(src("braid(3)"), builtin_group("S(4)")));
  GrowthOptions one, four;
  four.threads = 4;
  CHECK(hom_count_symmetric(src("braid(4)"), 6, one) == hom_count_symmetric(src("braid(4)"), 6, four));
  CHECK_THROWS_AS(hom_count_symmetric(src("braid(3)"), 9), CapExceeded);
  GrowthOptions wide;
  wide.max_degree = 11;
  CHECK_THROWS_AS(hom_count_symmetric(src("braid(3)"), 11, wide), CapExceeded);
}

TEST_CASE("Hall recursion") {
  CHECK(hall_recursion({1, 4, 36}) == std::vector<count_t>{1, 3, 13});
  CHECK_THROWS_AS(hall_recursion({1, 2, 5}), InternalInconsistency);

  GrowthReport b3 = ak_sequence(src("braid(3)"), 7);
  CHECK(b3.a == std::vector<count_t>{1, 1, 4, 9, 6, 22, 43});
  for (std::size_t k = 0; k < b3.a.size(); ++k) CHECK(b3.t[k] == factorial(static_cast<int>(k)) * b3.a[k]);

  CHECK(ak_sequence(src("braid(4)"), 4).a[3] == 17);
  CHECK(ak_sequence(src("braid(5)"), 5).a[4] == 6);
  CHECK(ak_sequence(src("free(2)"), 3).a[2] == 13);
}

TEST_CASE("normal subgroups of small index") {
  Presentation f2 = src("free(2)");
  CHECK(ak_normal(f2, 4) == 7);
  CHECK(ak_normal(f2, 6) == 15);
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int n = 1; n <= 3; ++n) {
      std::string f = "free(" + std::to_string(n) + ")";
      CHECK(ak_normal(src(f.c_str()), p) == (ipow(p, n) - 1) / (p - 1));
    }
  CHECK(groups_of_order(8).size() == 5);
  CHECK(groups_of_order(12).size() == 5);
  CHECK(groups_of_order(15).size() == 1);
  CHECK_THROWS_AS(ak_normal(f2, 16), InputError);

  // Normal subgroups are among all subgroups.
  GrowthReport b4 = ak_sequence(src("braid(4)"), 8);
  for (int k = 1; k <= 8; ++k) CHECK(ak_normal(src("braid(4)"), k) <= b4.a[k - 1]);
}

TEST_CASE("abelian Hall invariants") {
  AbelianInvariants f2 = abelian_invariants(src("free(2)"));
  using K = AbelianShape::Kind;
  CHECK(delta_abelian_closed(f2, AbelianShape{K::cyclic, 3, 1}) == 4);
  CHECK(delta_abelian_closed(f2, AbelianShape{K::cyclic, 2, 2}) == 6);
  CHECK(delta_abelian_closed(f2, AbelianShape{K::elementary, 2, 2}) == 1);

  for (const char* source : {"free(2)", "bs(2,4)", "surface(2)", "bs(1,9)", "bs(3,-6)", "klein"}) {
    Presentation p = src(source);
    AbelianInvariants inv = abelian_invariants(p);
    for (long q : {2, 3})
      for (int s = 1; s <= 2; ++s) {
        std::string zq = "Z(" + std::to_string(q) + ")";
        std::string cyc = s == 1 ? zq : "Z(" + std::to_string(q * q) + ")";
        CHECK_MESSAGE(delta_abelian_closed(inv, AbelianShape{K::cyclic, q, s}) == tower_delta(p, cyc), source, " ", cyc);
        std::string el = zq + "^" + std::to_string(s);
        CHECK_MESSAGE(delta_abelian_closed(inv, AbelianShape{K::elementary, q, s}) == tower_delta(p, el), source, " ",
                      el);
      }
    CHECK_MESSAGE(delta_abelian_closed(inv, AbelianShape{K::mixed, 2, 2}) == tower_delta(p, "Z(2)*Z(4)"), source);
    CHECK(delta_abelian_closed(inv, std::vector<long>{6}) == tower_delta(p, "Z(6)"));
  }
}

TEST_CASE("cohomological Hall invariants match the tower engine") {
  for (const char* source : {"free(2)", "braid(3)", "braid(4)", "klein", "surface(2)", "bs(2,6)", "hillman_link"}) {
    Presentation p = src(source);
    const std::pair<const char*, const char*> names[] = {{"S3", "S(3)"},   {"D8", "D(8)"},           {"Q8", "Q(8)"},
                                                         {"D12", "D(12)"}, {"Dstar12", "Dstar(12)"}, {"A4", "A(4)"},
                                                         {"S4", "S(4)"}};
    for (auto [name, spec] : names)
      CHECK_MESSAGE(delta_cohomological(p, name) == tower_delta(p, spec), source, " ", name);
  }
}

TEST_CASE("low-index counts two ways") {
  LowIndexDeltas f2 = low_index_via_deltas(src("free(2)"));
  CHECK(f2.a2 == 3);
  CHECK(f2.a3 == 13);
  CHECK(f2.a4 == 71);
  CHECK(f2.deltas.at("D8") == 3);
  CHECK(f2.deltas.at("A4") == 4);
  CHECK(f2.deltas.at("S4") == 9);

  LowIndexDeltas b3 = low_index_via_deltas(src("braid(3)"));
  CHECK(b3.a3 == 4);
  CHECK(b3.a4 == 9);

  for (const char* source : {"klein", "surface(2)", "braid(4)", "nonorientable(3)", "bs(1,3)"}) {
    Presentation p = src(source);
    LowIndexDeltas d = low_index_via_deltas(p);
    GrowthReport g = ak_sequence(p, 4);
    CHECK_MESSAGE(d.a2 == g.a[1], source);
    CHECK_MESSAGE(d.a3 == g.a[2], source);
    CHECK_MESSAGE(d.a4 == g.a[3], source);
  }
}

TEST_CASE("orientable and non-orientable surfaces") {
  for (int g = 1; g <= 2; ++g) {
    std::string s = "surface(" + std::to_string(g) + ")", n = "nonorientable(" + std::to_string(2 * g) + ")";
    CHECK(ak_sequence(src(s.c_str()), 5).a == ak_sequence(src(n.c_str()), 5).a);
    CHECK(tower_delta(src(s.c_str()), "Z(3)") != tower_delta(src(n.c_str()), "Z(3)"));
  }
}

TEST_CASE("B_5 has no non-cyclic small solvable quotients") {
  Presentation b5 = src("braid(5)");
  for (const char* target : {"S(3)", "D(8)", "A(4)"}) CHECK(tower_delta(b5, target) == 0);
  for (const char* target : {"Z(2)", "Z(3)", "Z(4)", "Z(6)"}) CHECK(tower_delta(b5, target) == 1);
}
