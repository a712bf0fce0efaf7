#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvcount/cohomology.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/lattice.hpp"
#include "solvcount/oracle.hpp"
#include "solvcount/subgrowth.hpp"

namespace solvcount {

enum class Format { json, tsv };

// Resolved run configuration, echoed first in every report, in this order.
using RunConfig = std::vector<std::pair<std::string, std::string>>;

// JSON keys: config, source, target, hom, epi, aut, delta, levels, provenance.
std::string format_count(const CountReport& r, const RunConfig& cfg, Format f);

// TSV columns k h_k t_k a_k (plus seconds with timing); normal counts follow
// as a second table.
std::string format_growth(const GrowthReport& r, const RunConfig& cfg, Format f, bool timing = false);

// Rows sorted by subgroup order, then lattice index.
std::string format_moebius(const SubgroupLattice& l, const MoebiusTable& mu, const RunConfig& cfg, Format f);

struct CocycleRow {
  std::vector<int> images;  // rho on the generators, as elements of B_i
  CohomologyReport cohomology;
  count_t surjective = 0;  // surjective lifts
};
std::string format_cocycle(const std::vector<CocycleRow>& rows, const RunConfig& cfg, Format f);

std::string format_verify(const std::vector<VerifyRow>& rows, const RunConfig& cfg, Format f);

// One row per braid group; cells are a_k or nullopt where the run was capped.
struct Table2Row {
  int n = 3;
  std::vector<std::optional<count_t>> a;  // a_kmin .. a_kmax
};
std::string format_table2(const std::vector<Table2Row>& rows, int kmin, const RunConfig& cfg, Format f);

struct CatalogEntry {
  std::string spec;
  int order = 1;
  std::vector<std::string> layers;  // "q^s" bottom-up
};
std::string format_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg, Format f);

}  // namespace solvcount
