#include "solvcount/oracle.hpp"

#include <atomic>
#include <chrono>
#include <cmath>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/cohomology.hpp"
#include "solvcount/counting.hpp"
#include "solvcount/parallel.hpp"

namespace solvcount {

namespace {

using Clock = std::chrono::steady_clock;

long relator_letters(const Presentation& p) {
  long total = 0;
  for (const Word& r : p.relators) total += static_cast<long>(r.size());
  return std::max(total, 1L);
}

// Letter operations for |t|^n candidates, or a reason to refuse.
std::optional<std::string> over_budget(double candidates, long letters, const OracleBudget& b) {
  const double ops = candidates * static_cast<double>(letters);
  if (ops > static_cast<double>(b.max_letter_ops))
    return "needs " + std::to_string(static_cast<long long>(ops)) + " letter operations, budget " +
           std::to_string(b.max_letter_ops);
  return std::nullopt;
}

bool relators_hold(const Presentation& p, const FiniteGroupTable& t, const std::vector<int>& im,
                   const std::vector<int>& inv) {
  for (const Word& r : p.relators) {
    int x = 0;
    for (const Letter& lt : r) x = t.mul(x, lt.exp > 0 ? im[lt.gen] : inv[lt.gen]);
    if (x != 0) return false;
  }
  return true;
}

// Size of the subgroup generated by the images: breadth-first right multiplication.
bool images_generate(const FiniteGroupTable& t, const std::vector<int>& im) {
  std::vector<char> seen(t.order(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int g : im) {
      int y = t.mul(queue[k], g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  return static_cast<int>(queue.size()) == t.order();
}

struct TupleScan {
  count_t homs = 0;
  count_t epis = 0;
  std::vector<std::vector<int>> kept;
  bool timed_out = false;
};

// Tuples with first image fixed to `first`; the rest enumerated odometer-style.
TupleScan scan_tuples(const Presentation& p, const FiniteGroupTable& t, int first, bool keep, Clock::time_point deadline,
                      bool has_deadline) {
  TupleScan out;
  const int n = p.num_generators(), m = t.order();
  std::vector<int> im(n, 0), inv(n, 0);
  im[0] = first;
  long step = 0;
  while (true) {
    for (int i = 0; i < n; ++i) inv[i] = t.inv(im[i]);
    if (relators_hold(p, t, im, inv)) {
      ++out.homs;
      if (images_generate(t, im)) ++out.epis;
      if (keep) out.kept.push_back(im);
    }
    if (has_deadline && (++step & 1023) == 0 && Clock::now() > deadline) {
      out.timed_out = true;
      return out;
    }
    int i = 1;
    while (i < n && ++im[i] == m) im[i++] = 0;
    if (i >= n) break;
  }
  return out;
}

struct FullScan {
  OracleCount hom, epi;
  std::vector<std::vector<int>> kept;
};

FullScan scan(const Presentation& p, const FiniteGroupTable& t, const OracleBudget& b, bool keep) {
  FullScan out;
  const int n = p.num_generators();
  if (n == 0) {
    out.hom = {true, 1, ""};
    out.epi = {true, t.order() == 1 ? 1u : 0u, ""};
    if (keep) out.kept.push_back({});
    return out;
  }
  if (auto why = over_budget(std::pow(static_cast<double>(t.order()), n), relator_letters(p), b)) {
    out.hom.note = out.epi.note = *why;
    return out;
  }
  const bool has_deadline = b.timeout_seconds > 0;
  const Clock::time_point deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.timeout_seconds));
  std::vector<TupleScan> parts = parallel_map<TupleScan>(t.order(), b.threads, [&](std::size_t first) {
    return scan_tuples(p, t, static_cast<int>(first), keep, deadline, has_deadline);
  });
  out.hom.verified = out.epi.verified = true;
  for (TupleScan& s : parts) {
    if (s.timed_out) {
      out.hom = out.epi = OracleCount{false, 0, "timeout"};
      out.kept.clear();
      return out;
    }
    out.hom.value += s.homs;
    out.epi.value += s.epis;
    for (auto& k : s.kept) out.kept.push_back(std::move(k));
  }
  return out;
}

using ExtElement = std::pair<ModVector, int>;

ModVector apply(const ModMatrix& m, const ModVector& v, int q) {
  ModVector out = ModVector::Zero(v.size());
  for (int i = 0; i < m.rows(); ++i) {
    long s = 0;
    for (int j = 0; j < m.cols(); ++j) s += static_cast<long>(m(i, j)) * v(j);
    out(i) = static_cast<int>(((s % q) + q) % q);
  }
  return out;
}

ModVector add(const ModVector& a, const ModVector& b, int q) {
  ModVector out(a.size());
  for (int i = 0; i < a.size(); ++i) out(i) = (a(i) + b(i)) % q;
  return out;
}

ExtElement ext_mul(const FiniteGroupTable& base, const ElementaryLayer& layer, const ExtElement& x,
                   const ExtElement& y) {
  const int q = layer.q;
  ModVector a = add(add(x.first, apply(layer.sigma[x.second], y.first, q), q), layer.cocycle(x.second, y.second), q);
  return {a, base.mul(x.second, y.second)};
}

// (a, b)^-1 = (-sigma_{b^-1}(a + chi(b, b^-1)), b^-1)
ExtElement ext_inv(const FiniteGroupTable& base, const ElementaryLayer& layer, const ExtElement& x) {
  const int q = layer.q, bi = base.inv(x.second);
  ModVector a = apply(layer.sigma[bi], add(x.first, layer.cocycle(x.second, bi), q), q);
  for (int i = 0; i < a.size(); ++i) a(i) = (q - a(i)) % q;
  return {a, bi};
}

}  // namespace

OracleCount brute_hom(const Presentation& p, const FiniteGroupTable& t, const OracleBudget& budget) {
  return scan(p, t, budget, false).hom;
}

OracleCount brute_epi(const Presentation& p, const FiniteGroupTable& t, const OracleBudget& budget) {
  return scan(p, t, budget, false).epi;
}

std::optional<std::vector<std::vector<int>>> brute_hom_list(const Presentation& p, const FiniteGroupTable& t,
                                                            const OracleBudget& budget) {
  FullScan s = scan(p, t, budget, true);
  if (!s.hom.verified) return std::nullopt;
  return std::move(s.kept);
}

bool brute_lift_check(const Presentation& p, const FiniteGroupTable& base, const ElementaryLayer& layer,
                      const std::vector<int>& images, const std::vector<ModVector>& values) {
  const int n = p.num_generators();
  if (static_cast<int>(images.size()) != n || static_cast<int>(values.size()) != n)
    throw InputError("lift check needs one image and one value per generator");
  std::vector<ExtElement> gen, gen_inv;
  for (int i = 0; i < n; ++i) {
    gen.push_back({values[i], images[i]});
    gen_inv.push_back(ext_inv(base, layer, gen.back()));
  }
  for (const Word& r : p.relators) {
    ExtElement x{ModVector::Zero(layer.s), 0};
    for (const Letter& lt : r) x = ext_mul(base, layer, x, lt.exp > 0 ? gen[lt.gen] : gen_inv[lt.gen]);
    if (x.second != 0 || !x.first.isZero()) return false;
  }
  return true;
}

std::optional<std::vector<bool>> brute_lift_accepted(const Presentation& p, const FiniteGroupTable& base,
                                                     const ElementaryLayer& layer, const std::vector<int>& images,
                                                     const OracleBudget& budget) {
  const int n = p.num_generators(), per = layer.module_order();
  const double candidates = std::pow(static_cast<double>(per), n);
  if (over_budget(candidates, relator_letters(p) * layer.s * layer.s, budget)) return std::nullopt;
  const auto total = static_cast<std::size_t>(candidates);
  std::vector<bool> out(total);
  std::vector<ModVector> values(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      values[i] = code_vector(static_cast<int>(c % per), layer.q, layer.s);
      c /= per;
    }
    out[code] = brute_lift_check(p, base, layer, images, values);
  }
  return out;
}

std::vector<std::string> default_verify_sources() {
  return {"free(1)", "free(2)",  "free(3)",     "bs(1,2)",       "bs(1,3)",       "bs(2,4)",
          "bs(2,-4)", "klein",   "braid(3)",    "braid(4)",      "parafree(1,1)", "parafree(1,3)"};
}

namespace {

// Engine-side membership: J x = rhs over Z_q.
bool system_accepts(const CocycleSystem& sys, const std::vector<ModVector>& values, int q) {
  const int s = sys.dim();
  for (int r = 0; r < sys.matrix.rows(); ++r) {
    std::int64_t acc = -sys.rhs(r);
    for (int j = 0; j < sys.matrix.cols(); ++j) acc += sys.matrix(r, j) * values[j / s](j % s);
    if (acc % q != 0) return false;
  }
  return true;
}

void lift_rows(const Presentation& p, const ExtensionTower& t, const OracleBudget& b, std::string& engine,
               std::string& oracle, std::string& status) {
  long pairs = 0, mismatches = 0, candidates = 0;
  for (int i = 0; i < t.depth(); ++i) {
    auto homs = brute_hom_list(p, t.level(i), b);
    if (!homs) {
      status = "unverified";
      oracle = "budget";
      return;
    }
    const ElementaryLayer& layer = t.layer(i);
    const int n = p.num_generators(), per = layer.module_order();
    for (const auto& rho : *homs) {
      auto accepted = brute_lift_accepted(p, t.level(i), layer, rho, b);
      if (!accepted) {
        status = "unverified";
        oracle = "budget";
        return;
      }
      CocycleSystem sys = build_system(p, t.level(i), layer, rho);
      std::vector<ModVector> values(n);
      for (std::size_t code = 0; code < accepted->size(); ++code) {
        std::size_t c = code;
        for (int g = 0; g < n; ++g) {
          values[g] = code_vector(static_cast<int>(c % per), layer.q, layer.s);
          c /= per;
        }
        if (system_accepts(sys, values, layer.q) != (*accepted)[code]) ++mismatches;
      }
      candidates += static_cast<long>(accepted->size());
      ++pairs;
    }
  }
  engine = std::to_string(pairs) + " (rho, layer) pairs, " + std::to_string(candidates) + " candidates";
  oracle = std::to_string(mismatches) + " mismatches";
  status = mismatches == 0 ? "pass" : "fail";
}

}  // namespace

std::vector<VerifyRow> verify_matrix(const std::vector<std::string>& sources, const std::vector<std::string>& targets,
                                     const OracleBudget& budget) {
  std::vector<VerifyRow> rows;
  CountOptions opt;
  opt.threads = budget.threads;
  for (const std::string& src : sources) {
    const Presentation p = builtin_presentation(src);
    for (const std::string& tgt : targets) {
      const BuiltinGroup g = builtin_group_full(tgt);
      FullScan brute = scan(p, g.concrete, budget, false);
      auto row = [&](const std::string& check, std::optional<count_t> engine, const OracleCount& oracle) {
        VerifyRow r{src, tgt, check, engine ? std::to_string(*engine) : "cap", "", ""};
        r.oracle = oracle.verified ? std::to_string(oracle.value) : "unverified";
        if (!engine || !oracle.verified)
          r.status = "unverified";
        else
          r.status = *engine == oracle.value ? "pass" : "fail";
        rows.push_back(std::move(r));
      };
      std::optional<count_t> hom, epi;
      try {
        hom = hom_count(p, g.tower, opt);
        epi = epi_count(p, g.tower, opt).epi;
      } catch (const CapExceeded&) {
      }
      row("hom", hom, brute.hom);
      row("epi", epi, brute.epi);
      VerifyRow lift{src, tgt, "lift", "", "", ""};
      lift_rows(p, g.tower, budget, lift.engine, lift.oracle, lift.status);
      rows.push_back(std::move(lift));
    }
  }
  return rows;
}

}  // namespace solvcount
