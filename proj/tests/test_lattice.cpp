#include <doctest.h>

#include <random>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/lattice.hpp"

using namespace solvcount;

namespace {

// Sum of mu over all subgroups containing h.
long upper_sum(const SubgroupLattice& l, const MoebiusTable& mu, int h) {
  long s = 0;
  for (int k = 0; k < l.size(); ++k)
    if (l.contains(k, h)) s += mu[k];
  return s;
}

}  // namespace

TEST_CASE("subgroup lattices") {
  CHECK(SubgroupLattice(cyclic_table(6)).size() == 4);
  CHECK(SubgroupLattice(dihedral_table(4)).size() == 10);
  CHECK(SubgroupLattice(builtin_group("S(4)").group()).size() == 30);

  // D_2m: one Z_l and m/l dihedral D_2l for each l | m.
  for (int m = 3; m <= 12; ++m) {
    SubgroupLattice l(dihedral_table(m));
    for (int d = 1; d <= m; ++d) {
      if (m % d) continue;
      int cyclic = 0, dihedral = 0;
      for (int i = 0; i < l.size(); ++i) {
        const ElementSet& h = l.subgroup(i);
        bool rotations = true;
        for (int x : set_elements(h)) rotations = rotations && x < m;
        if (rotations && l.order(i) == d) ++cyclic;
        if (!rotations && l.order(i) == 2 * d) ++dihedral;
      }
      CHECK(cyclic == 1);
      CHECK(dihedral == m / d);
    }
  }

  SubgroupLattice l(builtin_group("A(4)").group());
  CHECK(l.order(0) == 1);
  CHECK(l.order(l.top()) == 12);
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    int a = std::uniform_int_distribution<int>(0, l.top())(rng), b = std::uniform_int_distribution<int>(0, l.top())(rng);
    CHECK(l.meet(a, b) >= 0);
    CHECK(l.join(a, b) >= 0);
  }
  CHECK_THROWS_AS(SubgroupLattice(builtin_group("S(4)").group(), 12), CapExceeded);
}

TEST_CASE("inductive Moebius function") {
  SubgroupLattice d6(dihedral_table(3));
  MoebiusTable mu = moebius(d6);
  REQUIRE(d6.size() == 6);
  CHECK(mu[d6.top()] == 1);
  CHECK(mu[0] == 3);
  for (int i = 1; i < d6.top(); ++i) CHECK(mu[i] == -1);

  for (const std::string& spec : catalog_specs(24)) {
    SubgroupLattice l(builtin_group(spec).group());
    MoebiusTable m = moebius(l);
    for (int h = 0; h < l.size(); ++h) CHECK(upper_sum(l, m, h) == (h == l.top() ? 1 : 0));
  }
}

TEST_CASE("dihedral Moebius closed form") {
  for (int m = 3; m <= 12; ++m) {
    SubgroupLattice l(dihedral_table(m));
    MoebiusTable mu = moebius(l);
    for (int i = 0; i < l.size(); ++i) {
      bool rotations = true;
      for (int x : set_elements(l.subgroup(i))) rotations = rotations && x < m;
      if (rotations) {
        int d = l.order(i);
        CHECK(mu[i] == -(m / d) * moebius_number(m / d));
      } else {
        int d = l.order(i) / 2;
        CHECK(mu[i] == moebius_number(m / d));
      }
    }
  }
}

TEST_CASE("chief-series Moebius formula") {
  SubgroupLattice s4(builtin_group("S(4)").group());
  CHECK(moebius_kt(s4) == moebius(s4));
  SubgroupLattice d6(dihedral_table(3));
  MoebiusTable kt = moebius_kt(d6);
  CHECK(kt[d6.top()] == 1);
  CHECK(kt[1] == -1);
  for (const std::string& spec : catalog_specs(24)) {
    SubgroupLattice l(builtin_group(spec).group());
    CHECK_MESSAGE(moebius_kt(l) == moebius(l), spec);
  }
}

TEST_CASE("Weisner formula") {
  SubgroupLattice z4(cyclic_table(4));
  MoebiusTable w = moebius_weisner(z4);
  CHECK(w[1] == -1);
  CHECK(w[0] == 0);

  SubgroupLattice q8(builtin_group("Q(8)").group());
  MoebiusTable wq = moebius_weisner(q8);
  CHECK(wq[1] == 2);  // the centre, quotient Z_2^2
  CHECK(wq == moebius(q8));

  SubgroupLattice v(builtin_group("Z(2)^2").group());
  CHECK(moebius_weisner(v)[0] == 2);

  CHECK_THROWS_AS(moebius_weisner(SubgroupLattice(dihedral_table(3))), InputError);
}

TEST_CASE("Eulerian function via Moebius inversion") {
  for (const std::string& spec : catalog_specs(24)) {
    ExtensionTower t = builtin_group(spec);
    SubgroupLattice l(t.group());
    MoebiusTable mu = moebius(l);
    for (int n = 1; n <= 3; ++n) CHECK_MESSAGE(eulerian_via_moebius(l, mu, n) == gaschutz_eulerian(t, n), spec);
  }
}

TEST_CASE("Hall identities") {
  HallIdentityReport s3 = hall_identities(builtin_presentation("free", {2}), dihedral_table(3));
  CHECK(s3.hom == 36);
  CHECK(s3.epi == 18);
  CHECK(s3.consistent());

  for (int p : {2, 3, 5, 7}) {
    HallIdentityReport z = hall_identities(builtin_presentation("klein", {}), cyclic_table(p));
    CHECK(z.hom == z.epi + 1);
    CHECK(z.consistent());
  }
  for (const char* source : {"braid(3)", "bs(1,3)", "surface(2)"})
    for (const char* target : {"S(4)", "D(12)", "Q(8)", "Z(2)^3"})
      CHECK_MESSAGE(hall_identities(builtin_presentation(source), builtin_group(target).group()).consistent(), source,
                    " ", target);
}

TEST_CASE("dihedral epimorphisms via Moebius inversion") {
  for (int m = 2; m <= 8; ++m) {
    ExtensionTower d = builtin_group("D(" + std::to_string(2 * m) + ")");
    for (const char* source : {"free(2)", "klein", "braid(3)", "bs(2,4)"}) {
      Presentation p = builtin_presentation(source);
      CHECK_MESSAGE(dihedral_epi_via_moebius(p, m) == *epi_count(p, d).epi, source, " m=", m);
    }
  }
}

TEST_CASE("number-theoretic Moebius function") {
  CHECK(moebius_number(1) == 1);
  CHECK(moebius_number(6) == 1);
  CHECK(moebius_number(12) == 0);
  CHECK(moebius_number(30) == -1);
}
