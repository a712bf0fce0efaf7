#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "solvcount/common.hpp"
#include "solvcount/group_table.hpp"
#include "solvcount/smith.hpp"

namespace solvcount {

using ModMatrix = DenseMatrix<int>;  // entries reduced to [0, q)
using ModVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, int q);
ModVector mod_apply(const ModMatrix& a, const ModVector& v, int q);
ModMatrix mod_inverse_matrix(const ModMatrix& a, int q);  // throws if singular

// Z_q^s coordinates <-> integer code sum a_k q^k.
int vector_code(const ModVector& a, int q);
ModVector code_vector(int code, int q, int s);

// E = Z_q^s extended by a base group B with monodromy sigma and normalized
// 2-cocycle chi, both tabulated by base-element index.
struct ElementaryLayer {
  int q = 2;
  int s = 1;
  std::vector<ModMatrix> sigma;  // |B| matrices
  std::vector<ModVector> chi;    // |B|^2 vectors, row-major in (b1, b2)

  int module_order() const;
  const ModVector& cocycle(int b1, int b2) const { return chi[static_cast<std::size_t>(b1) * sigma.size() + b2]; }
  bool trivial_cocycle() const;
};

struct LayerConstants {
  int zeta = 0;       // 1 iff the base acts nontrivially
  bool split = true;  // a complement exists
  int kappa = 0;      // log_q |End(E)| as a module
  int alpha = 0;      // complemented chief factors isomorphic to E, E included
};

struct GroupElement {
  std::vector<ModVector> parts;  // layer coordinates, bottom-up
  bool operator==(const GroupElement& o) const;
};

// A finite solvable group as B_0 = 1 < ... < B_L, with B_{i+1} the extension of
// B_i by layer i. Elements of B_{i+1} are encoded as b + |B_i| * code(a).
class ExtensionTower {
 public:
  ExtensionTower();

  // Validates sigma (homomorphism into GL(s,q)), chi (normalized cocycle) and
  // irreducibility, then builds B_{i+1} and the layer constants.
  void push_layer(ElementaryLayer layer);

  int depth() const { return static_cast<int>(layers_.size()); }
  const ElementaryLayer& layer(int i) const { return layers_.at(i); }
  const LayerConstants& constants(int i) const { return constants_.at(i); }
  const FiniteGroupTable& level(int i) const { return levels_.at(i); }
  const FiniteGroupTable& group() const { return levels_.back(); }
  int order() const { return levels_.back().order(); }

  // Image of an element of B_{from} in B_to (to <= from).
  static int project(int element, const FiniteGroupTable& to) { return element % to.order(); }
  int project(int element, int to_level) const { return element % levels_.at(to_level).order(); }
  // Coordinates in layer i of an element of B_j (j > i): the E-part of its image in B_{i+1}.
  ModVector layer_coordinates(int element, int i) const;
  int compose(int base, const ModVector& a, int i) const;  // element of B_{i+1}

  GroupElement decode(int element) const;
  int encode(const GroupElement& e) const;
  // Extension formulas applied level by level, independent of the tables.
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;

  // Action of an element of B_j (j > i) on E_i through the projection.
  const ModMatrix& action_on_layer(int element, int i) const { return layers_[i].sigma[project(element, i)]; }

  std::string name;

 private:
  int mul_formula(int level, int x, int y) const;
  int inv_formula(int level, int x) const;
  LayerConstants compute_constants(int i) const;

  std::vector<ElementaryLayer> layers_;
  std::vector<FiniteGroupTable> levels_;
  std::vector<LayerConstants> constants_;
};

// Module helpers over Z_q. Each action list gives the images of a fixed
// generating set.
int commutant_dim(const std::vector<ModMatrix>& action, int q);
int intertwiner_dim(const std::vector<ModMatrix>& from, const std::vector<ModMatrix>& to, int q);
bool is_irreducible(const std::vector<ModMatrix>& action, int q, int s);

// Action of the generators of B_{top} on E_i.
std::vector<ModMatrix> layer_action(const ExtensionTower& t, int i, int top_level);

// Chief-factor module types of the full group, for the Eulerian product formula.
struct ModuleType {
  int q = 2, s = 1, zeta = 0, kappa = 0;
  int complemented = 0;      // u
  int non_complemented = 0;  // v
  std::vector<int> layers;
};
std::vector<ModuleType> module_types(const ExtensionTower& t);

// Number of maps f: B -> E with f(gh) = f(g) + sigma_g f(h) + chi(g,h); chi may
// be null. With chi null this is |Z^1_sigma(B, E)|.
count_t count_twisted_cocycles(const FiniteGroupTable& base, const ElementaryLayer& layer, bool with_cocycle,
                               count_t max_candidates = 50'000'000);

struct ComplementCounts {
  count_t by_cocycles = 0;  // c_chi |Z^1_sigma(B,E)|
  count_t by_gaschutz = 0;  // c_chi |E|^zeta q^(kappa (alpha - 1))
  count_t by_search = 0;    // subgroups K with K E = B_{i+1}, K cap E = 1
};
// with_search = false skips the direct search (by_search stays 0).
ComplementCounts complement_counts(const ExtensionTower& t, int i, bool with_search = true);
// All three routes, required to agree.
count_t complement_count(const ExtensionTower& t, int i);

struct TowerBuild {
  ExtensionTower tower;
  std::vector<int> to_tower;  // concrete element -> tower element
};

// series: Gamma = Gamma_0 > Gamma_1 > ... > Gamma_L = 1, all normal in Gamma,
// with elementary abelian factors that are minimal normal in the quotients.
TowerBuild tower_from_series(const FiniteGroupTable& g, const std::vector<ElementSet>& series);
// Chief series found by minimal normal subgroup search, Gamma first.
std::vector<ElementSet> chief_series_subsets(const FiniteGroupTable& g, std::size_t cap = 512);
// Tower along chief_series_subsets.
TowerBuild chief_series(const FiniteGroupTable& g, std::size_t cap = 512);

}  // namespace solvcount
