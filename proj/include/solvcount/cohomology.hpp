#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "solvcount/common.hpp"
#include "solvcount/group_table.hpp"
#include "solvcount/modlinalg.hpp"
#include "solvcount/presentation.hpp"
#include "solvcount/tower.hpp"

namespace solvcount {

// A finite abelian group A = sum of cyclic factors Z_{moduli[j]} (each a prime
// power) with source generators acting by automorphisms. Entry (i, j) of an
// endomorphism matrix is the image of the j-th factor generator in factor i,
// reduced mod moduli[i].
class TwistedAction {
 public:
  TwistedAction() = default;
  // Computes inverse matrices; throws InputError if an action is not invertible.
  TwistedAction(std::vector<std::int64_t> moduli, std::vector<IntMatrix> generator_action);
  // E = Z_q^s with the given GL(s,q) matrices.
  static TwistedAction elementary(int q, int s, const std::vector<ModMatrix>& generator_action);
  // Trivial action of n generators on A.
  static TwistedAction trivial(std::vector<std::int64_t> moduli, int n);

  int dim() const { return static_cast<int>(moduli_.size()); }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  const IntMatrix& generator(int i) const { return gens_.at(i); }

  IntMatrix identity() const;
  IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) const;
  IntMatrix reduce(IntMatrix m) const;
  IntMatrix word_action(const Word& w) const;
  BigInt order() const;

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<IntMatrix> gens_;
  std::vector<IntMatrix> inverses_;
};

IntMatrix evaluate_ring_element(const FreeGroupRingElement& e, const TwistedAction& act);

// J a = rhs with a in A^n (unknown block i = values of the cocycle on x_i) and
// one equation block in A per relator.
struct CocycleSystem {
  std::vector<std::int64_t> moduli;  // of A
  int relators = 0;
  int generators = 0;
  IntMatrix matrix;  // (relators * dim) x (generators * dim)
  IntVector rhs;     // relators * dim

  int dim() const { return static_cast<int>(moduli.size()); }
  std::vector<std::int64_t> row_moduli() const;
  std::vector<std::int64_t> col_moduli() const;
};

// Homogeneous system from the symbolic Fox Jacobian.
CocycleSystem build_system(const Presentation& p, const TwistedAction& act);

// Lifting system for rho: G -> B through E_i (base = B, layer data on B):
// homogeneous part from prefix images, right-hand side from the chi-sums.
// Throws InputError if rho does not kill every relator.
CocycleSystem build_system(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                           const std::vector<int>& images);

// Action of G on E_i through rho.
TwistedAction layer_twisted_action(const FiniteGroupTable& base, const ElementaryLayer& layer,
                                   const std::vector<int>& images);

struct SolutionCount {
  std::map<long, int> log;  // per prime q: |solutions restricted to A_q| = q^log[q]
  BigInt total() const;
};

// Number of solutions of the homogeneous system.
SolutionCount homogeneous_count(const CocycleSystem& sys);
// Exhaustive enumeration over A^n; for tests and tiny systems.
BigInt homogeneous_count_exhaustive(const CocycleSystem& sys, count_t cap = 1u << 20);

struct EpsilonWitness {
  int epsilon = 0;
  std::optional<IntVector> witness;
};
EpsilonWitness epsilon_and_witness(const CocycleSystem& sys);

// Full affine solution set, witness plus homogeneous part. The system must be
// over a single Z_q (an elementary layer).
struct LayerSolution {
  int q = 2;
  int d = 0;  // log_q |Z^1|
  bool solvable = false;
  IntVector witness;
  std::vector<IntVector> kernel;  // basis over Z_q
};
LayerSolution solve_layer_system(const CocycleSystem& sys, int q);

struct CohomologyReport {
  BigInt z1;
  std::map<long, int> d;
  BigInt b1;
  std::map<long, int> h1;
  int epsilon = 1;
  std::optional<IntVector> witness;
};

// Z^1, B^1 = A / A^G, and H^1 of G with coefficients in act.
CohomologyReport analyze(const Presentation& p, const TwistedAction& act);
// Same for a lifting problem, with epsilon and witness.
CohomologyReport analyze_lift(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                              const std::vector<int>& images);

// dim H^1 through the layer for rho: d - log_q |B^1|.
int h1_dim(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
           const std::vector<int>& images);

// |Z^1_sigma(B, E)| for a finite source by generator-value search.
count_t finite_source_z1(const FiniteGroupTable& base, const ElementaryLayer& layer);

}  // namespace solvcount
