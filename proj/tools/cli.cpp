#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "solvcount/builtin_groups.hpp"
#include "solvcount/closed_forms.hpp"
#include "solvcount/parallel.hpp"
#include "solvcount/report.hpp"

namespace solvcount {

namespace {

struct Common {
  bool tsv = false;
  unsigned threads = default_threads();
  count_t frontier_cap = 10'000'000;
  std::size_t order_cap = 512;

  Format format() const { return tsv ? Format::tsv : Format::json; }
  CountOptions count_options() const { return {frontier_cap, threads}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--tsv", c.tsv, "Emit TSV instead of JSON");
  cmd->add_option("--threads", c.threads, "Worker threads (default: available cores)")->check(CLI::PositiveNumber);
  cmd->add_option("--frontier-cap", c.frontier_cap, "Homomorphisms held per lifting level")->capture_default_str();
  cmd->add_option("--order-cap", c.order_cap, "Largest target order accepted")->capture_default_str();
}

RunConfig base_config(const std::string& verb, const Common& c) {
  // Thread count is left out so reports do not depend on it.
  return {{"verb", verb},
          {"format", c.tsv ? "tsv" : "json"},
          {"frontier_cap", std::to_string(c.frontier_cap)},
          {"order_cap", std::to_string(c.order_cap)}};
}

ExtensionTower truncated(const ExtensionTower& t, int depth) {
  ExtensionTower out;
  for (int i = 0; i < depth; ++i) out.push_layer(t.layer(i));
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting homomorphisms and epimorphisms into finite solvable groups", "solvcount"};
  app.require_subcommand(1);

  Common common;
  std::string source, target;

  auto* hom = app.add_subcommand("hom", "|Hom(G, Gamma)| by lifting through a chief series");
  auto* epi = app.add_subcommand("epi", "|Epi(G, Gamma)| with |Aut Gamma| and the Hall invariant");
  auto* del = app.add_subcommand("delta", "Hall invariant |Epi(G, Gamma)| / |Aut Gamma|");
  for (auto* cmd : {hom, epi, del}) {
    cmd->add_option("--source", source, "Presentation: builtin:NAME(...), <gens | rels>, or a file")->required();
    cmd->add_option("--target", target, "Group DSL or multiplication-table file")->required();
    add_common(cmd, common);
  }

  auto* aut = app.add_subcommand("aut", "|Aut Gamma| by search and by lifting");
  aut->add_option("--target", target, "Group DSL or multiplication-table file")->required();
  add_common(aut, common);

  int level = -1;
  auto* coc = app.add_subcommand("cocycle", "Z^1, H^1 and epsilon for every rho onto B_i lifted through layer i");
  coc->add_option("--source", source, "Presentation")->required();
  coc->add_option("--target", target, "Group DSL or multiplication-table file")->required();
  coc->add_option("--level", level, "Layer index (default: top layer)");
  add_common(coc, common);

  std::string method = "inductive";
  std::size_t lattice_cap = 200;
  auto* moe = app.add_subcommand("moebius", "Moebius function of the subgroup lattice");
  moe->add_option("--target", target, "Group DSL or multiplication-table file")->required();
  moe->add_option("--method", method, "inductive, kt or weisner")
      ->check(CLI::IsMember({"inductive", "kt", "weisner"}))
      ->capture_default_str();
  moe->add_option("--lattice-cap", lattice_cap, "Largest group order for the lattice")->capture_default_str();
  add_common(moe, common);

  int kmax = 6, nmax = 6, max_degree = 8;
  bool normal = false, table2 = false, timing = false;
  auto* gro = app.add_subcommand("growth", "Subgroup growth a_k by the Hall recursion over Hom(G, S_k)");
  gro->add_option("--source", source, "Presentation (not needed with --table2)");
  gro->add_option("--kmax", kmax, "Largest index")->check(CLI::PositiveNumber)->capture_default_str();
  gro->add_flag("--normal", normal, "Also count normal subgroups (k <= 15)");
  gro->add_flag("--table2", table2, "a_3..a_kmax for the braid groups B_3..B_nmax");
  gro->add_option("--nmax", nmax, "Largest braid group for --table2")->capture_default_str();
  gro->add_option("--max-degree", max_degree, "Largest symmetric degree enumerated (at most 10)")
      ->capture_default_str();
  gro->add_flag("--timing", timing, "Report per-k seconds (output then varies between runs)");
  add_common(gro, common);

  std::vector<std::string> verify_sources;
  int max_order = 24;
  count_t budget_ops = 100'000'000;
  double timeout = 0;
  auto* ver = app.add_subcommand("verify", "Brute-force oracle against the lifting engine");
  ver->add_option("--source", verify_sources, "Sources (repeatable; default: built-in matrix)");
  ver->add_option("--max-order", max_order, "Largest catalog target")->capture_default_str();
  ver->add_option("--budget", budget_ops, "Oracle letter operations per run")->capture_default_str();
  ver->add_option("--timeout", timeout, "Oracle seconds per run (0 = none)")->capture_default_str();
  add_common(ver, common);

  std::string dump_spec;
  int catalog_order = 48;
  auto* cat = app.add_subcommand("catalog", "List built-in groups, or dump one as a multiplication table");
  cat->add_option("--max-order", catalog_order, "Largest order listed")->capture_default_str();
  cat->add_option("--dump", dump_spec, "Write this group's table in the text format");
  add_common(cat, common);

  std::vector<const char*> argv{"solvcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Format fmt = common.format();
    const CountOptions opt = common.count_options();
    RunConfig cfg;

    if (hom->parsed() || epi->parsed() || del->parsed()) {
      const std::string verb = hom->parsed() ? "hom" : epi->parsed() ? "epi" : "delta";
      cfg = base_config(verb, common);
      cfg.push_back({"source", source});
      cfg.push_back({"target", target});
      const Presentation p = resolve_presentation(source);
      const BuiltinGroup g = resolve_group(target, common.order_cap);
      CountReport rep;
      if (hom->parsed()) {
        rep.hom = hom_count(p, g.tower, opt);
        rep.provenance["hom"] = "sum of epsilon |Z^1| level by level";
      } else {
        rep = delta(p, g.tower, opt);
      }
      rep.source = source;
      rep.target = target;
      out << format_count(rep, cfg, fmt);
    } else if (aut->parsed()) {
      cfg = base_config("aut", common);
      cfg.push_back({"target", target});
      const BuiltinGroup g = resolve_group(target, common.order_cap);
      CountReport rep;
      rep.source = target;
      rep.target = target;
      rep.aut = aut_order(g.concrete, common.order_cap);
      const count_t lifted = aut_order_by_lifting(g.tower, opt);
      require(lifted == *rep.aut, "|Aut| by lifting (" + std::to_string(lifted) + ") differs from search (" +
                                      std::to_string(*rep.aut) + ")");
      rep.epi = lifted;
      rep.provenance["aut"] = "generator-image search";
      rep.provenance["epi"] = "Epi(Gamma, Gamma) by lifting a Cayley presentation";
      out << format_count(rep, cfg, fmt);
    } else if (coc->parsed()) {
      const Presentation p = resolve_presentation(source);
      const BuiltinGroup g = resolve_group(target, common.order_cap);
      const ExtensionTower& t = g.tower;
      if (t.depth() == 0) throw InputError("target has no layers");
      if (level < 0) level = t.depth() - 1;
      if (level >= t.depth()) throw InputError("--level must be below the tower depth " + std::to_string(t.depth()));
      cfg = base_config("cocycle", common);
      cfg.push_back({"source", source});
      cfg.push_back({"target", target});
      cfg.push_back({"level", std::to_string(level)});
      EpiEnumeration below = epi_enumerate(p, truncated(t, level), opt, true);
      if (level == 0) below.top = {GeneratorImageMap{0, std::vector<int>(p.num_generators(), 0), true}};
      std::vector<CocycleRow> rows;
      for (const GeneratorImageMap& rho : below.top) {
        CocycleRow row;
        row.images = rho.images;
        row.cohomology = analyze_lift(p, t.level(level), t.layer(level), rho.images);
        row.surjective = epi_lift(p, t, level, rho, false).surjective;
        rows.push_back(std::move(row));
      }
      out << format_cocycle(rows, cfg, fmt);
    } else if (moe->parsed()) {
      cfg = base_config("moebius", common);
      cfg.push_back({"target", target});
      cfg.push_back({"method", method});
      const BuiltinGroup g = resolve_group(target, common.order_cap);
      SubgroupLattice l(g.concrete, lattice_cap);
      MoebiusTable mu = method == "kt" ? moebius_kt(l) : method == "weisner" ? moebius_weisner(l) : moebius(l);
      out << format_moebius(l, mu, cfg, fmt);
    } else if (gro->parsed()) {
      GrowthOptions gopt{max_degree, common.threads};
      cfg = base_config("growth", common);
      cfg.push_back({"kmax", std::to_string(kmax)});
      cfg.push_back({"max_degree", std::to_string(max_degree)});
      if (table2) {
        cfg.push_back({"nmax", std::to_string(nmax)});
        if (nmax < 3) throw InputError("--nmax must be at least 3");
        if (kmax < 3) throw InputError("--kmax must be at least 3 with --table2");
        std::vector<Table2Row> rows;
        for (int n = 3; n <= nmax; ++n) {
          Table2Row row;
          row.n = n;
          const Presentation p = builtin_presentation("braid", {n});
          std::vector<count_t> h;
          for (int k = 1; k <= kmax; ++k) {
            if (k > std::min(max_degree, 10)) break;
            h.push_back(hom_count_symmetric(p, k, gopt));
          }
          const std::vector<count_t> a = hall_recursion(h);
          for (int k = 3; k <= kmax; ++k)
            row.a.push_back(k <= static_cast<int>(a.size()) ? std::optional<count_t>(a[k - 1]) : std::nullopt);
          rows.push_back(std::move(row));
        }
        out << format_table2(rows, 3, cfg, fmt);
      } else {
        if (source.empty()) throw InputError("growth needs --source unless --table2 is given");
        cfg.push_back({"source", source});
        cfg.push_back({"normal", normal ? "true" : "false"});
        const Presentation p = resolve_presentation(source);
        GrowthReport rep = ak_sequence(p, kmax, gopt);
        if (normal)
          for (int k = 1; k <= std::min(kmax, 15); ++k) rep.normal.push_back(ak_normal(p, k, opt));
        out << format_growth(rep, cfg, fmt, timing);
      }
    } else if (ver->parsed()) {
      if (verify_sources.empty()) verify_sources = default_verify_sources();
      cfg = base_config("verify", common);
      std::string joined;
      for (const auto& s : verify_sources) joined += (joined.empty() ? "" : " ") + s;
      cfg.push_back({"sources", joined});
      cfg.push_back({"max_order", std::to_string(max_order)});
      cfg.push_back({"budget", std::to_string(budget_ops)});
      cfg.push_back({"timeout", std::to_string(timeout)});
      OracleBudget b{budget_ops, timeout, common.threads};
      std::vector<VerifyRow> rows = verify_matrix(verify_sources, catalog_specs(max_order), b);
      out << format_verify(rows, cfg, fmt);
      for (const VerifyRow& r : rows)
        if (r.status == "fail") return 3;
    } else if (cat->parsed()) {
      if (!dump_spec.empty()) {
        write_table(out, resolve_group(dump_spec, common.order_cap).concrete);
        return 0;
      }
      cfg = base_config("catalog", common);
      cfg.push_back({"max_order", std::to_string(catalog_order)});
      std::vector<CatalogEntry> entries;
      for (const std::string& spec : catalog_specs(catalog_order)) {
        const ExtensionTower t = builtin_group(spec);
        CatalogEntry e{spec, t.order(), {}};
        for (int i = 0; i < t.depth(); ++i)
          e.layers.push_back(std::to_string(t.layer(i).q) + "^" + std::to_string(t.layer(i).s));
        entries.push_back(std::move(e));
      }
      out << format_catalog(entries, cfg, fmt);
    }
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace solvcount
