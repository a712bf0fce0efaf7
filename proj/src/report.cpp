#include "solvcount/report.hpp"

#include <sstream>

#include <json.hpp>

namespace solvcount {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const RunConfig& cfg) {
  Json j = Json::object();
  for (const auto& [k, v] : cfg) j[k] = v;
  return j;
}

void config_tsv(std::ostream& out, const RunConfig& cfg) {
  for (const auto& [k, v] : cfg) out << "# " << k << '\t' << v << '\n';
}

Json optional_json(const std::optional<count_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_text(const std::optional<count_t>& v) { return v ? std::to_string(*v) : "-"; }

// Exact integer: a JSON number when it fits in 64 bits, a decimal string otherwise.
Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<count_t>::max()) return Json(static_cast<count_t>(v));
  return Json(v.str());
}

Json prime_map_json(const std::map<long, int>& m) {
  Json j = Json::object();
  for (auto [p, e] : m) j[std::to_string(p)] = e;
  return j;
}

std::string prime_map_text(const std::map<long, int>& m) {
  std::string s;
  for (auto [p, e] : m) s += (s.empty() ? "" : ",") + std::to_string(p) + ":" + std::to_string(e);
  return s.empty() ? "-" : s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_count(const CountReport& r, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["source"] = r.source;
    j["target"] = r.target;
    j["hom"] = optional_json(r.hom);
    j["epi"] = optional_json(r.epi);
    j["aut"] = optional_json(r.aut);
    j["delta"] = optional_json(r.delta);
    j["levels"] = Json::array();
    for (const LevelStats& l : r.levels)
      j["levels"].push_back({{"level", l.level},
                             {"q", l.q},
                             {"s", l.s},
                             {"zeta", l.zeta},
                             {"kappa", l.kappa},
                             {"alpha", l.alpha},
                             {"split", l.split},
                             {"complements", l.complements},
                             {"epi_in", l.epi_in},
                             {"epi_out", l.epi_out},
                             {"lifts", l.lifts},
                             {"sum_epsilon", l.sum_epsilon},
                             {"sum_q_beta", l.sum_q_beta}});
    j["provenance"] = Json::object();
    for (const auto& [k, v] : r.provenance) j["provenance"][k] = v;
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "field\tvalue\n";
  out << "source\t" << r.source << "\ntarget\t" << r.target << '\n';
  out << "hom\t" << optional_text(r.hom) << "\nepi\t" << optional_text(r.epi) << '\n';
  out << "aut\t" << optional_text(r.aut) << "\ndelta\t" << optional_text(r.delta) << '\n';
  if (!r.levels.empty()) {
    out << "\nlevel\tq\ts\tzeta\tkappa\talpha\tsplit\tcomplements\tepi_in\tepi_out\tlifts\tsum_epsilon\tsum_q_beta\n";
    for (const LevelStats& l : r.levels)
      out << l.level << '\t' << l.q << '\t' << l.s << '\t' << l.zeta << '\t' << l.kappa << '\t' << l.alpha << '\t'
          << (l.split ? 1 : 0) << '\t' << l.complements << '\t' << l.epi_in << '\t' << l.epi_out << '\t' << l.lifts
          << '\t' << l.sum_epsilon << '\t' << l.sum_q_beta << '\n';
  }
  return out.str();
}

std::string format_growth(const GrowthReport& r, const RunConfig& cfg, Format f, bool timing) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["h"] = r.h;
    j["t"] = r.t;
    j["a"] = r.a;
    if (!r.normal.empty()) j["a_normal"] = r.normal;
    if (timing) j["seconds"] = r.seconds;
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "k\th_k\tt_k\ta_k" << (timing ? "\tseconds" : "") << '\n';
  for (std::size_t k = 0; k < r.a.size(); ++k) {
    out << k + 1 << '\t' << r.h[k] << '\t' << r.t[k] << '\t' << r.a[k];
    if (timing) out << '\t' << r.seconds[k];
    out << '\n';
  }
  if (!r.normal.empty()) {
    out << "\nk\ta_k_normal\n";
    for (std::size_t k = 0; k < r.normal.size(); ++k) out << k + 1 << '\t' << r.normal[k] << '\n';
  }
  return out.str();
}

std::string format_moebius(const SubgroupLattice& l, const MoebiusTable& mu, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["subgroups"] = Json::array();
    for (int i = 0; i < l.size(); ++i)
      j["subgroups"].push_back({{"index", i}, {"order", l.order(i)}, {"generators", l.generators(i)}, {"mu", mu[i]}});
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "order\tgenerators\tmu\n";
  for (int i = 0; i < l.size(); ++i) {
    std::string g = join_ints(l.generators(i));
    out << l.order(i) << '\t' << (g.empty() ? "-" : g) << '\t' << mu[i] << '\n';
  }
  return out.str();
}

std::string format_cocycle(const std::vector<CocycleRow>& rows, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["rho"] = Json::array();
    for (const CocycleRow& r : rows) {
      const CohomologyReport& c = r.cohomology;
      Json w = nullptr;
      if (c.witness) {
        w = Json::array();
        for (int i = 0; i < c.witness->size(); ++i) w.push_back((*c.witness)(i));
      }
      j["rho"].push_back({{"images", r.images},
                          {"epsilon", c.epsilon},
                          {"z1", big_json(c.z1)},
                          {"d", prime_map_json(c.d)},
                          {"b1", big_json(c.b1)},
                          {"h1", prime_map_json(c.h1)},
                          {"surjective_lifts", r.surjective},
                          {"witness", w}});
    }
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "images\tepsilon\tz1\td\tb1\th1\tsurjective_lifts\n";
  for (const CocycleRow& r : rows) {
    const CohomologyReport& c = r.cohomology;
    out << join_ints(r.images) << '\t' << c.epsilon << '\t' << c.z1.str() << '\t' << prime_map_text(c.d) << '\t'
        << c.b1.str() << '\t' << prime_map_text(c.h1) << '\t' << r.surjective << '\n';
  }
  return out.str();
}

std::string format_verify(const std::vector<VerifyRow>& rows, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["rows"] = Json::array();
    for (const VerifyRow& r : rows)
      j["rows"].push_back({{"source", r.source},
                           {"target", r.target},
                           {"check", r.check},
                           {"engine", r.engine},
                           {"oracle", r.oracle},
                           {"status", r.status}});
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "source\ttarget\tcheck\tengine\toracle\tstatus\n";
  for (const VerifyRow& r : rows)
    out << r.source << '\t' << r.target << '\t' << r.check << '\t' << r.engine << '\t' << r.oracle << '\t' << r.status
        << '\n';
  return out.str();
}

std::string format_table2(const std::vector<Table2Row>& rows, int kmin, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["rows"] = Json::array();
    for (const Table2Row& r : rows) {
      Json cells = Json::object();
      for (std::size_t i = 0; i < r.a.size(); ++i) cells["a_" + std::to_string(kmin + i)] = optional_json(r.a[i]);
      j["rows"].push_back({{"group", "B_" + std::to_string(r.n)}, {"a", cells}});
    }
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "group";
  const std::size_t width = rows.empty() ? 0 : rows.front().a.size();
  for (std::size_t i = 0; i < width; ++i) out << "\ta_" << kmin + i;
  out << '\n';
  for (const Table2Row& r : rows) {
    out << "B_" << r.n;
    for (const auto& v : r.a) out << '\t' << optional_text(v);
    out << '\n';
  }
  return out.str();
}

std::string format_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg, Format f) {
  if (f == Format::json) {
    Json j;
    j["config"] = config_json(cfg);
    j["groups"] = Json::array();
    for (const CatalogEntry& e : entries)
      j["groups"].push_back({{"spec", e.spec}, {"order", e.order}, {"layers", e.layers}});
    return dump(j);
  }
  std::ostringstream out;
  config_tsv(out, cfg);
  out << "spec\torder\tlayers\n";
  for (const CatalogEntry& e : entries) {
    std::string layers;
    for (const auto& l : e.layers) layers += (layers.empty() ? "" : " ") + l;
    out << e.spec << '\t' << e.order << '\t' << layers << '\n';
  }
  return out.str();
}

}  // namespace solvcount
