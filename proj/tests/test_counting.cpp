#include <doctest.h>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/closed_forms.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/oracle.hpp"

using namespace solvcount;

namespace {

Presentation src(const char* spec) { return builtin_presentation(spec); }

count_t epi(const char* source, const char* target) { return *epi_count(src(source), builtin_group(target)).epi; }

count_t del(const char* source, const char* target) { return *delta(src(source), builtin_group(target)).delta; }

std::vector<std::vector<int>> epis_onto(const Presentation& p, const FiniteGroupTable& t) {
  std::vector<std::vector<int>> out;
  auto homs = brute_hom_list(p, t);
  for (auto& images : homs.value())
    if (generates(t, images)) out.push_back(images);
  return out;
}

}  // namespace

TEST_CASE("hom counts") {
  CHECK(hom_count(src("free(2)"), builtin_group("S(3)")) == 36);
  CHECK(hom_count(src("free(2)"), builtin_group("Z(6)")) == 36);
  CHECK(hom_count(src("braid(3)"), builtin_group("S(3)")) == 12);
  CHECK(hom_count(src("klein"), builtin_group("Z(2)*S(3)")) ==
        hom_count(src("klein"), builtin_group("Z(2)")) * hom_count(src("klein"), builtin_group("S(3)")));
  CountOptions tight;
  tight.frontier_cap = 10;
  CHECK_THROWS_AS(hom_count(src("free(2)"), builtin_group("S(4)"), tight), CapExceeded);
}

TEST_CASE("epi counts and Hall invariants") {
  CHECK(epi("free(2)", "S(3)") == 18);
  CountReport s4 = delta(src("free(2)"), builtin_group("S(4)"));
  CHECK(*s4.epi == 216);
  CHECK(*s4.aut == 24);
  CHECK(*s4.delta == 9);
  CHECK(epi("braid(3)", "S(3)") == 6);
  CHECK(del("braid(4)", "S(4)") == 3);
  CHECK(del("klein", "S(4)") == 0);
  CHECK(del("hillman_link", "S(4)") == 33);
  CHECK(del("hillman_link", "S(3)") == 3);
  CHECK(del("free(2)", "Z(3)*D(8)") == del("free(2)", "Z(3)") * del("free(2)", "D(8)"));
  CHECK(del("braid(4)", "Z(5)*S(4)") == del("braid(4)", "Z(5)") * del("braid(4)", "S(4)"));
}

TEST_CASE("level statistics follow the per-level arithmetic") {
  for (const char* source : {"free(2)", "braid(4)", "parafree(1,3)", "klein"}) {
    ExtensionTower t = builtin_group("S(4)");
    CountReport r = epi_count(src(source), t);
    REQUIRE(r.levels.size() == 3);
    for (const LevelStats& l : r.levels) {
      count_t e = 1;
      for (int k = 0; k < l.s * l.zeta; ++k) e *= l.q;
      count_t cx = l.split ? 1 : 0;
      for (int k = 0; k < l.kappa * (l.alpha - 1); ++k) cx *= l.q;
      CHECK(l.epi_out == e * l.sum_q_beta - e * cx * l.sum_epsilon);
      CHECK(l.epi_out == l.lifts - l.complements * l.sum_epsilon);
    }
    CHECK(r.levels.back().epi_out == *r.epi);
  }
}

TEST_CASE("epi_lift") {
  ExtensionTower s4 = builtin_group("S(4)");
  Presentation f2 = src("free(2)");
  auto rhos = epis_onto(f2, s4.level(2));
  CHECK(rhos.size() == 18);
  count_t total = 0;
  for (const auto& images : rhos) {
    LiftResult r = epi_lift(f2, s4, 2, {2, images, true});
    CHECK(r.lifts == 16);
    CHECK(r.surjective == 12);
    CHECK(r.maps.size() == 12);
    for (const auto& m : r.maps) CHECK(generates(s4.group(), m.images));
    total += r.surjective;
  }
  CHECK(total == 216);

  Presentation k = src("klein");
  for (const auto& images : epis_onto(k, s4.level(2))) {
    LiftResult r = epi_lift(k, s4, 2, {2, images, true});
    CHECK(r.lifts == 4);
    CHECK(r.surjective == 0);
  }

  ExtensionTower d8 = builtin_group("D(8)");
  Presentation bs = src("bs(1,3)");
  int blocked = 0;
  for (const auto& images : epis_onto(bs, d8.level(2))) {
    LiftResult r = epi_lift(bs, d8, 2, {2, images, true});
    if (r.epsilon == 0) {
      ++blocked;
      CHECK(r.lifts == 0);
      CHECK(r.maps.empty());
    }
  }
  CHECK(blocked == 4);
}

TEST_CASE("Gaschutz product formula") {
  CHECK(gaschutz_eulerian(builtin_group("S(4)"), 2) == 216);
  for (int n = 1; n <= 4; ++n) CHECK(gaschutz_eulerian(builtin_group("Z(2)"), n) == (count_t{1} << n) - 1);
  CHECK(gaschutz_eulerian(builtin_group("D(8)"), 2) == 24);
}

TEST_CASE("closed-form Eulerian functions") {
  CHECK(closed_form_eulerian("dihedral", {3}, 2) == 18);
  CHECK(closed_form_eulerian("binary_dihedral", {2}, 2) == 24);
  CHECK(closed_form_eulerian("binary_dihedral", {2}, 2) / aut_order(builtin_group("Q(8)").group()) == 1);
  for (int m = 2; m <= 8; ++m) {
    std::string d = "D(" + std::to_string(2 * m) + ")";
    for (long g = 1; g <= 2; ++g) {
      std::string s = "surface(" + std::to_string(g) + ")";
      CHECK_MESSAGE(closed_form_eulerian("surface", {g, m}, 0) == *epi_count(src(s.c_str()), builtin_group(d)).epi,
                    s, " ", d);
    }
    for (long g = 1; g <= 4; ++g) {
      std::string s = "nonorientable(" + std::to_string(g) + ")";
      CHECK_MESSAGE(
          closed_form_eulerian("nonorientable", {g, m}, 0) == *epi_count(src(s.c_str()), builtin_group(d)).epi, s,
          " ", d);
    }
  }
}

TEST_CASE("closed-form Hall invariants") {
  CHECK(closed_form_delta("bs_d8", {2, 6}) == 3);
  CHECK(closed_form_delta("bs_d8", {1, 3}) == 1);
  CHECK(closed_form_delta("bs_d8", {1, 5}) == 0);
  CHECK(closed_form_delta("parafree_s4", {1, 3}) == 17);
  CHECK(closed_form_delta("parafree_s4", {2, 4}) == 9);
  CHECK(closed_form_delta("braid_metabelian", {2, 7, 6}) == 2);
  CHECK(del("braid(4)", "M(7,6,3)") == 2);
  CHECK(closed_form_delta("braid_solvable", {5, 0}) == 0);
  CHECK(closed_form_delta("braid_solvable", {5, 1}) == 1);
  CHECK_THROWS_AS(closed_form_delta("nosuch", {}), InputError);
}

TEST_CASE("q^2 p formula") {
  CHECK(epi_count_q2p(src("free(2)"), 2, 3, 1) == 216);
  CHECK(epi_count_q2p(src("klein"), 2, 3, 1) == 0);
  OracleCount brute = brute_epi(src("bs(1,2)"), builtin_group("S(4)").group());
  REQUIRE(brute.verified);
  CHECK(epi_count_q2p(src("bs(1,2)"), 2, 3, 1) == brute.value);
  CHECK(epi_count_q2p(src("braid(4)"), 2, 3, 1) == epi("braid(4)", "S(4)"));
}

TEST_CASE("dihedral and binary dihedral recursions match the engine") {
  for (const char* source : {"free(2)", "bs(1,3)", "bs(2,4)", "klein", "surface(2)", "braid(3)"}) {
    Presentation p = src(source);
    for (int m = 2; m <= 12; ++m)
      CHECK_MESSAGE(epi_count_dihedral_recursion(p, m) ==
                        *epi_count(p, builtin_group("D(" + std::to_string(2 * m) + ")")).epi,
                    source, " m=", m);
    for (int m = 2; m <= 6; ++m)
      CHECK_MESSAGE(epi_count_binary_dihedral_recursion(p, m) ==
                        *epi_count(p, builtin_group("Dstar(" + std::to_string(4 * m) + ")")).epi,
                    source, " m=", m);
  }
}

TEST_CASE("tables route through chief series") {
  BuiltinGroup g = resolve_group("D(12)");
  CHECK(g.tower.order() == 12);
  CHECK(*epi_count(src("free(2)"), chief_series(g.concrete).tower).epi == epi("free(2)", "D(12)"));
}
