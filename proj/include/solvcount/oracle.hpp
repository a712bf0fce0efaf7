#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/group_table.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

struct OracleBudget {
  count_t max_letter_ops = 100'000'000;  // relator letters evaluated, summed over all candidates
  double timeout_seconds = 0;            // 0 = none
  unsigned threads = 1;
};

// A brute-force count, or an explicit refusal when the budget does not cover it.
struct OracleCount {
  bool verified = false;
  count_t value = 0;
  std::string note;  // why the run was not verified
};

// Every generator-image tuple is tried and every relator evaluated in the table.
OracleCount brute_hom(const Presentation& p, const FiniteGroupTable& t, const OracleBudget& budget = {});
// As brute_hom, keeping tuples whose images generate t.
OracleCount brute_epi(const Presentation& p, const FiniteGroupTable& t, const OracleBudget& budget = {});

// All homomorphisms as image tuples, or nullopt past the budget.
std::optional<std::vector<std::vector<int>>> brute_hom_list(const Presentation& p, const FiniteGroupTable& t,
                                                            const OracleBudget& budget = {});

// Whether x_i -> (values[i], images[i]) defines a homomorphism into the
// extension of base by layer, evaluating each relator letter by letter with
// (a, b)(a', b') = (a + sigma_b a' + chi(b, b'), b b').
bool brute_lift_check(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                      const std::vector<int>& images, const std::vector<ModVector>& values);

// Acceptance of every candidate (values[i] = digits of the code in base q^s,
// generator 0 least significant), or nullopt past the budget.
std::optional<std::vector<bool>> brute_lift_accepted(const Presentation& p, const FiniteGroupTable& base,
                                                     const ElementaryLayer& layer, const std::vector<int>& images,
                                                     const OracleBudget& budget = {});

struct VerifyRow {
  std::string source;
  std::string target;
  std::string check;   // hom, epi or lift
  std::string engine;  // value or summary
  std::string oracle;
  std::string status;  // pass, fail or unverified
};

// Default matrix: sources with at most three generators, catalog targets of order <= 24.
std::vector<std::string> default_verify_sources();
std::vector<VerifyRow> verify_matrix(const std::vector<std::string>& sources, const std::vector<std::string>& targets,
                                     const OracleBudget& budget = {});

}  // namespace solvcount
