#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/group_table.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

struct CountOptions {
  count_t frontier_cap = 10'000'000;  // homomorphisms held or counted per level
  unsigned threads = 1;
};

// Images of the source generators as elements of level `level` of a tower.
struct GeneratorImageMap {
  int level = 0;
  std::vector<int> images;
  bool surjective = false;

  auto operator<=>(const GeneratorImageMap&) const = default;
};

bool is_homomorphism(const Presentation& p, const FiniteGroupTable& target, const std::vector<int>& images);
bool generates(const FiniteGroupTable& target, const std::vector<int>& images);

// Lifts of one epimorphism onto B_i through layer i.
struct LiftResult {
  int epsilon = 0;
  int d = 0;     // log_q |Z^1|
  int beta = 0;  // dim H^1
  count_t lifts = 0;
  count_t surjective = 0;
  std::vector<GeneratorImageMap> maps;  // surjective lifts, when kept
};

// All epsilon q^d lifts are enumerated; the surjective ones are returned and
// their number is reconciled with epsilon q^d - c(B_{i+1}).
LiftResult epi_lift(const Presentation& p, const ExtensionTower& t, int level, const GeneratorImageMap& rho,
                    bool keep_maps = true);

struct LevelStats {
  int level = 0;
  int q = 2, s = 1, zeta = 0, kappa = 0, alpha = 0;
  bool split = true;
  count_t complements = 0;
  count_t epi_in = 0;
  count_t epi_out = 0;
  count_t lifts = 0;        // sum of epsilon q^d
  count_t sum_epsilon = 0;  // liftable epimorphisms
  count_t sum_q_beta = 0;   // sum of epsilon q^beta
};

struct CountReport {
  std::string source;
  std::string target;
  std::optional<count_t> hom;
  std::optional<count_t> epi;
  std::optional<count_t> aut;
  std::optional<count_t> delta;
  std::vector<LevelStats> levels;
  std::map<std::string, std::string> provenance;  // field -> formula used
};

// Sum over rho in Hom(G, B_i) of epsilon |Z^1|, level by level.
count_t hom_count(const Presentation& p, const ExtensionTower& t, const CountOptions& opt = {});

struct EpiEnumeration {
  count_t count = 0;
  std::vector<LevelStats> levels;
  std::vector<GeneratorImageMap> top;  // filled when requested
};
EpiEnumeration epi_enumerate(const Presentation& p, const ExtensionTower& t, const CountOptions& opt = {},
                             bool keep_top = false);

CountReport epi_count(const Presentation& p, const ExtensionTower& t, const CountOptions& opt = {});

// |Epi| / |Aut|, with integrality enforced. aut defaults to the brute-force order.
CountReport delta(const Presentation& p, const ExtensionTower& t, const CountOptions& opt = {},
                  std::optional<count_t> aut = std::nullopt);

// Product over chief-factor module types.
count_t gaschutz_eulerian(const ExtensionTower& t, int n);

// Cayley presentation on the table's generators: one relator per non-tree
// edge of a breadth-first spanning tree.
Presentation presentation_from_table(const FiniteGroupTable& g);
// |Aut| as |Epi(Gamma, Gamma)| computed by lifting.
count_t aut_order_by_lifting(const ExtensionTower& t, const CountOptions& opt = {});

// q^2 sum over rho in Epi(G, D_2p) of (q^beta - 1), beta for the V(q,p,r) layer.
count_t epi_count_q2p(const Presentation& p, int q, int prime_p, int r, const CountOptions& opt = {});

}  // namespace solvcount
