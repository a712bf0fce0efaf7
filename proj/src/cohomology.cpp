#include "solvcount/cohomology.hpp"

#include <algorithm>
#include <string>

namespace solvcount {

namespace {

bool prime_power_of(std::int64_t m, long& p, int& e) {
  auto f = factorize(m);
  if (f.size() != 1) return false;
  p = f[0].first;
  e = f[0].second;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// TwistedAction

TwistedAction::TwistedAction(std::vector<std::int64_t> moduli, std::vector<IntMatrix> generator_action)
    : moduli_(std::move(moduli)) {
  for (std::int64_t m : moduli_) {
    long p;
    int e;
    if (m < 2 || !prime_power_of(m, p, e)) throw InputError("cyclic factor orders must be prime powers > 1");
  }
  for (IntMatrix& g : generator_action) {
    if (g.rows() != dim() || g.cols() != dim()) throw InputError("action matrix has the wrong size");
    gens_.push_back(reduce(std::move(g)));
  }
  // Aut(A) is finite, so the inverse is a power of the matrix.
  const IntMatrix id = identity();
  for (const IntMatrix& g : gens_) {
    IntMatrix pw = g, prev = id;
    long steps = 0;
    while (pw != id) {
      prev = pw;
      pw = multiply(pw, g);
      if (++steps > 2'000'000 || pw == g) throw InputError("action matrix is not invertible");
    }
    inverses_.push_back(steps == 0 ? id : prev);
  }
}

TwistedAction TwistedAction::elementary(int q, int s, const std::vector<ModMatrix>& generator_action) {
  std::vector<IntMatrix> gens;
  for (const ModMatrix& m : generator_action) gens.push_back(m.cast<std::int64_t>());
  return TwistedAction(std::vector<std::int64_t>(s, q), std::move(gens));
}

TwistedAction TwistedAction::trivial(std::vector<std::int64_t> moduli, int n) {
  const int d = static_cast<int>(moduli.size());
  return TwistedAction(std::move(moduli), std::vector<IntMatrix>(n, IntMatrix::Identity(d, d)));
}

IntMatrix TwistedAction::identity() const { return IntMatrix::Identity(dim(), dim()); }

IntMatrix TwistedAction::reduce(IntMatrix m) const {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = mod_reduce(m(i, j), moduli_[i]);
  return m;
}

IntMatrix TwistedAction::multiply(const IntMatrix& a, const IntMatrix& b) const {
  const int d = dim();
  IntMatrix c = IntMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < d; ++j) c(i, j) = mod_reduce(c(i, j) + a(i, k) * b(k, j), moduli_[i]);
    }
  return c;
}

IntMatrix TwistedAction::word_action(const Word& w) const {
  IntMatrix m = identity();
  for (const Letter& l : w) {
    if (l.gen >= num_generators()) throw InputError("word uses a generator outside the action");
    m = multiply(m, l.exp > 0 ? gens_[l.gen] : inverses_[l.gen]);
  }
  return m;
}

BigInt TwistedAction::order() const {
  BigInt n = 1;
  for (std::int64_t m : moduli_) n *= m;
  return n;
}

IntMatrix evaluate_ring_element(const FreeGroupRingElement& e, const TwistedAction& act) {
  IntMatrix out = IntMatrix::Zero(act.dim(), act.dim());
  for (const auto& [w, c] : e.terms()) {
    IntMatrix m = act.word_action(w);
    for (int i = 0; i < act.dim(); ++i) {
      const std::int64_t cm = static_cast<std::int64_t>(BigInt(((c % act.moduli()[i]) + act.moduli()[i]) % act.moduli()[i]));
      for (int j = 0; j < act.dim(); ++j) out(i, j) = mod_reduce(out(i, j) + cm * m(i, j), act.moduli()[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Systems

std::vector<std::int64_t> CocycleSystem::row_moduli() const {
  std::vector<std::int64_t> out;
  for (int k = 0; k < relators; ++k) out.insert(out.end(), moduli.begin(), moduli.end());
  return out;
}

std::vector<std::int64_t> CocycleSystem::col_moduli() const {
  std::vector<std::int64_t> out;
  for (int k = 0; k < generators; ++k) out.insert(out.end(), moduli.begin(), moduli.end());
  return out;
}

CocycleSystem build_system(const Presentation& p, const TwistedAction& act) {
  if (act.num_generators() != p.num_generators()) throw InputError("action does not match the presentation");
  CocycleSystem sys;
  sys.moduli = act.moduli();
  sys.relators = p.num_relators();
  sys.generators = p.num_generators();
  const int d = act.dim();
  sys.matrix = IntMatrix::Zero(sys.relators * d, sys.generators * d);
  sys.rhs = IntVector::Zero(sys.relators * d);
  SymbolicJacobian jac = symbolic_jacobian(p);
  for (int k = 0; k < sys.relators; ++k)
    for (int i = 0; i < sys.generators; ++i)
      sys.matrix.block(k * d, i * d, d, d) = evaluate_ring_element(jac[k][i], act);
  return sys;
}

TwistedAction layer_twisted_action(const FiniteGroupTable& base, const ElementaryLayer& layer,
                                   const std::vector<int>& images) {
  std::vector<ModMatrix> act;
  for (int b : images) {
    if (b < 0 || b >= base.order()) throw InputError("generator image outside the target");
    act.push_back(layer.sigma[b]);
  }
  return TwistedAction::elementary(layer.q, layer.s, act);
}

CocycleSystem build_system(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                           const std::vector<int>& images) {
  const int n = p.num_generators(), m = p.num_relators(), q = layer.q, s = layer.s;
  if (static_cast<int>(images.size()) != n) throw InputError("one image per generator is required");
  for (int b : images)
    if (b < 0 || b >= base.order()) throw InputError("generator image outside the target");
  CocycleSystem sys;
  sys.moduli.assign(s, q);
  sys.relators = m;
  sys.generators = n;
  sys.matrix = IntMatrix::Zero(m * s, n * s);
  sys.rhs = IntVector::Zero(m * s);
  for (int k = 0; k < m; ++k) {
    const Word& r = p.relators[k];
    // prefix[j] = image of u_1 ... u_j
    std::vector<int> prefix(r.size() + 1, 0), letter(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
      int b = images[r[j].gen];
      letter[j] = r[j].exp > 0 ? b : base.inv(b);
      prefix[j + 1] = base.mul(prefix[j], letter[j]);
    }
    if (prefix.back() != 0)
      throw InputError("generator images do not satisfy relator " + std::to_string(k + 1));
    ModVector c = ModVector::Zero(s);
    for (std::size_t j = 0; j < r.size(); ++j) {
      auto block = sys.matrix.block(k * s, r[j].gen * s, s, s);
      if (r[j].exp > 0) {
        block += layer.sigma[prefix[j]].cast<std::int64_t>();
      } else {
        block -= layer.sigma[prefix[j + 1]].cast<std::int64_t>();
        // Lift of x^-1 carries -sigma_{b^-1} chi(b^-1, b), seen through the prefix.
        c -= mod_apply(layer.sigma[prefix[j]], layer.cocycle(letter[j], images[r[j].gen]), q);
      }
      if (j + 1 < r.size()) c += layer.cocycle(prefix[j + 1], letter[j + 1]);
    }
    for (int t = 0; t < s; ++t) {
      sys.rhs(k * s + t) = mod_reduce(-static_cast<std::int64_t>(c(t)), q);
      for (int col = 0; col < n * s; ++col) sys.matrix(k * s + t, col) = mod_reduce(sys.matrix(k * s + t, col), q);
    }
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Counting solutions

BigInt SolutionCount::total() const {
  BigInt t = 1;
  for (const auto& [p, e] : log) t *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  return t;
}

namespace {

struct PrimaryPart {
  long q = 2;
  std::vector<int> rows, cols;
  std::vector<int> row_exp, col_exp;  // factor exponents
  bool homocyclic = true;
  int r = 0;  // common exponent when homocyclic, else the maximum
};

std::map<long, PrimaryPart> primary_parts(const CocycleSystem& sys) {
  std::map<long, PrimaryPart> parts;
  auto rm = sys.row_moduli(), cm = sys.col_moduli();
  auto note = [&](std::int64_t mod, int idx, bool is_row) {
    long p;
    int e;
    prime_power_of(mod, p, e);
    PrimaryPart& pp = parts[p];
    pp.q = p;
    (is_row ? pp.rows : pp.cols).push_back(idx);
    (is_row ? pp.row_exp : pp.col_exp).push_back(e);
    if (pp.r != 0 && pp.r != e) pp.homocyclic = false;
    pp.r = std::max(pp.r, e);
  };
  for (int j = 0; j < static_cast<int>(cm.size()); ++j) note(cm[j], j, false);
  for (int i = 0; i < static_cast<int>(rm.size()); ++i) note(rm[i], i, true);
  return parts;
}

IntMatrix sub_matrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// log_q |ker| for a q-primary block with mixed exponents, through the index of
// M Z^N + D Z^N' in Z^N' (D = diagonal of the row factor orders).
int mixed_primary_log(const IntMatrix& m, const PrimaryPart& pp) {
  const int rows = static_cast<int>(pp.rows.size()), cols = static_cast<int>(pp.cols.size());
  int log_domain = 0, log_codomain = 0;
  for (int e : pp.col_exp) log_domain += e;
  for (int e : pp.row_exp) log_codomain += e;
  DenseMatrix<BigInt> lat(rows, cols + rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) lat(i, j) = BigInt(m(i, j));
    for (int j = 0; j < rows; ++j) lat(i, cols + j) = i == j ? BigInt(ipow64(pp.q, pp.row_exp[i])) : BigInt(0);
  }
  std::vector<BigInt> inv = smith_invariants<BigInt>(lat);
  require(static_cast<int>(inv.size()) == rows, "lattice of a primary block is not of full rank");
  int log_index = 0;
  for (BigInt v : inv) {
    while (v % pp.q == 0) {
      v /= pp.q;
      ++log_index;
    }
    require(v == 1, "lattice index is not a prime power");
  }
  return log_domain + log_index - log_codomain;
}

}  // namespace

SolutionCount homogeneous_count(const CocycleSystem& sys) {
  SolutionCount out;
  for (const auto& [q, pp] : primary_parts(sys)) {
    if (pp.cols.empty()) continue;
    IntMatrix block = sub_matrix(sys.matrix, pp.rows, pp.cols);
    out.log[q] = pp.homocyclic ? solve_mod_prime_power(block, IntVector(), q, pp.r).log_count
                               : mixed_primary_log(block, pp);
  }
  return out;
}

BigInt homogeneous_count_exhaustive(const CocycleSystem& sys, count_t cap) {
  auto cm = sys.col_moduli(), rm = sys.row_moduli();
  double space = 1;
  for (std::int64_t m : cm) space *= static_cast<double>(m);
  if (space > static_cast<double>(cap)) throw CapExceeded("exhaustive cocycle enumeration exceeds cap");
  const int nc = static_cast<int>(cm.size()), nr = static_cast<int>(rm.size());
  std::vector<std::int64_t> x(nc, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < nr && ok; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < nc; ++j) acc = mod_reduce(acc + sys.matrix(i, j) * x[j], rm[i]);
      ok = acc == 0;
    }
    if (ok) ++count;
    int j = 0;
    while (j < nc && ++x[j] == cm[j]) x[j++] = 0;
    if (j == nc) break;
  }
  return count;
}

EpsilonWitness epsilon_and_witness(const CocycleSystem& sys) {
  EpsilonWitness out;
  IntVector witness = IntVector::Zero(sys.generators * sys.dim());
  for (const auto& [q, pp] : primary_parts(sys)) {
    IntVector rhs(pp.rows.size());
    for (std::size_t i = 0; i < pp.rows.size(); ++i) rhs(i) = sys.rhs(pp.rows[i]);
    if (!pp.homocyclic) {
      if (rhs.isZero()) continue;
      throw InputError("inhomogeneous systems need homocyclic primary parts");
    }
    if (pp.cols.empty()) {
      if (!rhs.isZero()) return out;
      continue;
    }
    ModSolution sol = solve_mod_prime_power(sub_matrix(sys.matrix, pp.rows, pp.cols), rhs, q, pp.r);
    if (!sol.solvable) return out;
    for (std::size_t j = 0; j < pp.cols.size(); ++j) witness(pp.cols[j]) = sol.witness(j);
  }
  out.epsilon = 1;
  out.witness = witness;
  return out;
}

LayerSolution solve_layer_system(const CocycleSystem& sys, int q) {
  for (std::int64_t m : sys.moduli)
    if (m != q) throw InputError("layer system expected over Z_" + std::to_string(q));
  ModSolution sol = solve_mod_prime_power(sys.matrix, sys.rhs, q, 1);
  LayerSolution out;
  out.q = q;
  out.d = sol.log_count;
  out.solvable = sol.solvable;
  if (sol.solvable) out.witness = sol.witness;
  out.kernel = std::move(sol.kernel_gens);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

// Fixed points of the generator actions: kernel of the stacked (g_i - 1).
SolutionCount fixed_points(const TwistedAction& act) {
  CocycleSystem fix;
  fix.moduli = act.moduli();
  fix.relators = act.num_generators();
  fix.generators = 1;
  const int d = act.dim();
  fix.matrix = IntMatrix::Zero(fix.relators * d, d);
  fix.rhs = IntVector::Zero(fix.relators * d);
  for (int i = 0; i < act.num_generators(); ++i)
    fix.matrix.block(i * d, 0, d, d) = act.reduce(act.generator(i) - act.identity());
  return homogeneous_count(fix);
}

CohomologyReport finish_report(const CocycleSystem& sys, const TwistedAction& act) {
  CohomologyReport rep;
  SolutionCount z = homogeneous_count(sys);
  rep.d = z.log;
  rep.z1 = z.total();
  SolutionCount fixed = fixed_points(act);
  // |B^1| = |A| / |A^G|, per prime.
  std::map<long, int> log_a;
  for (std::int64_t m : act.moduli()) {
    long p;
    int e;
    prime_power_of(m, p, e);
    log_a[p] += e;
  }
  rep.b1 = 1;
  for (const auto& [p, e] : log_a) {
    int fixed_log = act.num_generators() == 0 ? e : fixed.log[p];
    int b1_log = e - fixed_log;
    rep.b1 *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(b1_log));
    rep.h1[p] = rep.d[p] - b1_log;
    require(rep.h1[p] >= 0, "B^1 larger than Z^1");
  }
  return rep;
}

}  // namespace

CohomologyReport analyze(const Presentation& p, const TwistedAction& act) {
  CohomologyReport rep = finish_report(build_system(p, act), act);
  rep.epsilon = 1;
  rep.witness = IntVector::Zero(p.num_generators() * act.dim());
  return rep;
}

CohomologyReport analyze_lift(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                              const std::vector<int>& images) {
  CocycleSystem sys = build_system(p, base, layer, images);
  CohomologyReport rep = finish_report(sys, layer_twisted_action(base, layer, images));
  EpsilonWitness ew = epsilon_and_witness(sys);
  rep.epsilon = ew.epsilon;
  rep.witness = ew.witness;
  return rep;
}

int h1_dim(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
           const std::vector<int>& images) {
  TwistedAction act = layer_twisted_action(base, layer, images);
  CohomologyReport rep = finish_report(build_system(p, base, layer, images), act);
  return rep.h1[layer.q];
}

count_t finite_source_z1(const FiniteGroupTable& base, const ElementaryLayer& layer) {
  return count_twisted_cocycles(base, layer, false);
}

}  // namespace solvcount
