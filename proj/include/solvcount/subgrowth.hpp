#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/presentation.hpp"

namespace solvcount {

struct GrowthOptions {
  int max_degree = 8;  // largest k accepted by hom_count_symmetric (at most 10)
  unsigned threads = 1;
};

// |Hom(G, S_k)|. Generators are assigned most-constrained first; the first
// one ranges over conjugacy class representatives weighted by class size, and
// each relator is checked as soon as all of its generators are assigned.
count_t hom_count_symmetric(const Presentation& p, int k, const GrowthOptions& opt = {});

struct GrowthReport {
  std::vector<count_t> h;  // h[k-1] = |Hom(G, S_k)|
  std::vector<count_t> t;  // transitive homomorphisms
  std::vector<count_t> a;  // index-k subgroups
  std::vector<count_t> normal;     // a_k^normal for k <= normal.size()
  std::vector<double> seconds;     // per-k enumeration time
};

// a_1..a_K by the Hall recursion.
GrowthReport ak_sequence(const Presentation& p, int kmax, const GrowthOptions& opt = {});

// Hall recursion on given h_1..h_K; exact divisibility is enforced.
std::vector<count_t> hall_recursion(const std::vector<count_t>& h);

// Groups of order k <= 15, by DSL spec.
std::vector<std::string> groups_of_order(int k);

// Number of normal subgroups of index k <= 15.
count_t ak_normal(const Presentation& p, int k, const CountOptions& opt = {});

// Abelian p-groups handled by the closed forms.
struct AbelianShape {
  enum class Kind { cyclic, elementary, mixed } kind = Kind::cyclic;
  long p = 2;
  int s = 1;  // Z_{p^s}, Z_p^s, or Z_p + Z_{p^s} (s >= 2)
};
count_t delta_abelian_closed(const AbelianInvariants& inv, const AbelianShape& shape);
// Abelian group from invariant factors, split into primary parts; nullopt if
// some primary part has no closed form.
std::optional<count_t> delta_abelian_closed(const AbelianInvariants& inv, const std::vector<long>& factors);

// delta for S_3, D_8, Q_8, D_12, Dstar_12, A_4 and S_4 from twisted H^1 and
// epsilon over abelian quotients. Names: "S3", "D8", "Q8", "D12", "Dstar12", "A4", "S4".
count_t delta_cohomological(const Presentation& p, const std::string& name, const CountOptions& opt = {});

struct LowIndexDeltas {
  count_t a2 = 0, a3 = 0, a4 = 0;
  std::map<std::string, count_t> deltas;
};
LowIndexDeltas low_index_via_deltas(const Presentation& p, const CountOptions& opt = {});

}  // namespace solvcount
