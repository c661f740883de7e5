#include "wedderburn/cli.hpp"

#include <json.hpp>

#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wedderburn/arith.hpp"
#include "wedderburn/cohomology.hpp"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/orbits.hpp"
#include "wedderburn/scan.hpp"

namespace wedderburn::cli {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t need(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing required option --") + name);
  return *v;
}

std::string join(const std::vector<std::int64_t>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

Json orbit_json(const orbits::CmOrbitData& o, std::int64_t m) {
  Json j;
  j["t"] = o.t;
  j["h"] = o.h;
  j["k"] = o.k;
  j["s"] = o.s;
  j["d"] = o.d;
  j["r_mat"] = o.r_mat;
  j["case"] = orbits::to_string(orbits::primary_case(o, m));
  return j;
}

Json blocks_json(const std::vector<std::pair<std::int64_t, std::int64_t>>& blocks) {
  Json arr = Json::array();
  for (const auto& [n, d] : blocks) arr.push_back(Json::array({n, d}));
  return arr;
}

Json decomposition_json(const decomposition::Decomposition& dec, std::int64_t lambda, const Json& verified) {
  Json j;
  j["p"] = dec.params.p;
  j["m"] = dec.params.m;
  j["ell"] = dec.params.ell;
  j["r"] = dec.params.r;
  j["lambda"] = lambda;
  j["class_index"] = dec.params.class_index;
  j["f"] = dec.f;
  j["orbits"] = Json::array();
  for (const auto& o : dec.orbits) j["orbits"].push_back(orbit_json(o, dec.params.m));
  j["commutative"] = dec.commutative;
  j["blocks"] = Json::array();
  for (const auto& b : dec.matrix_blocks) j["blocks"].push_back(Json{{"n", b.n}, {"d", b.d}});
  j["dimension"] = dec.total_dimension();
  j["verified"] = verified;
  return j;
}

struct OracleOutcome {
  bool match = false;
  std::string detail;
};

OracleOutcome cross_check(const RunConfig& cfg, const cohomology::GroupSpec& spec,
                          const cohomology::CocycleClass& cls, const decomposition::Decomposition& dec) {
  try {
    auto algebra = oracle::build_algebra(spec, cls);
    if (cfg.perturb_oracle) cfg.perturb_oracle(algebra);
    const auto run = oracle::run_oracle(algebra, cfg.exhaustive_associativity
                                                     ? oracle::AssociativityCheck::Exhaustive
                                                     : oracle::AssociativityCheck::Generators);
    const auto expected = dec.all_blocks();
    if (run.blocks == expected) return {true, ""};
    std::ostringstream os;
    os << "oracle blocks";
    for (const auto& [n, d] : run.blocks) os << " (" << n << "," << d << ")";
    return {false, os.str()};
  } catch (const std::exception& e) {
    return {false, std::string("oracle failed: ") + e.what()};
  }
}

}  // namespace

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto spec = cohomology::validate_spec(need(cfg.p, "p"), need(cfg.m, "m"), need(cfg.r, "r"));
    const std::int64_t ell = need(cfg.ell, "ell");
    cohomology::require_semisimple(spec, ell);
    const auto cls = cohomology::classify_lambda(ell, spec.m(), cfg.lambda);
    std::mt19937_64 rng(cfg.seed);
    const auto dec = decomposition::wedderburn(spec, cls, rng);

    std::optional<OracleOutcome> check;
    if (cfg.verify) check = cross_check(cfg, spec, cls, dec);

    if (cfg.format == Format::Json) {
      const Json verified = check ? Json(check->match) : Json(nullptr);
      out << decomposition_json(dec, cls.lambda, verified).dump() << "\n";
    } else {
      out << "G = C_" << spec.p() << " x|_" << spec.r() << " C_" << spec.m() << " over F_" << ell
          << ", lambda = " << cls.lambda << " (class " << cls.class_index << " of " << cls.class_count << ")\n";
      out << decomposition::render(dec) << "\n";
      out << "dimension: " << decomposition::dimension_identity(dec) << " = " << spec.p() << " * " << spec.m()
          << "\n";
      if (check) {
        out << "oracle: " << (check->match ? "MATCH" : "MISMATCH");
        if (!check->detail.empty()) out << " (" << check->detail << ")";
        out << "\n";
      }
    }
    if (!decomposition::dimension_check(dec)) {
      err << "dimension check failed\n";
      return 1;
    }
    return check && !check->match ? 1 : 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig forced = cfg;
  forced.verify = true;
  return cmd_decompose(forced, out, err);
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto spec = cohomology::validate_spec(need(cfg.p, "p"), need(cfg.m, "m"), need(cfg.r, "r"));
    const std::int64_t ell = need(cfg.ell, "ell");
    cohomology::require_semisimple(spec, ell);
    const std::int64_t f = arith::mul_order(ell, spec.p());
    const auto frob = orbits::frobenius_orbits(spec.p(), ell);
    const auto data = orbits::analyze(spec, ell);

    if (cfg.format == Format::Json) {
      Json j;
      j["p"] = spec.p();
      j["m"] = spec.m();
      j["ell"] = ell;
      j["r"] = spec.r();
      j["f"] = f;
      j["frobenius_orbits"] = static_cast<std::int64_t>(frob.size());
      j["orbits"] = Json::array();
      for (const auto& o : data) {
        Json oj;
        oj["members"] = Json::array();
        for (const auto& fo : o.member_orbits) oj["members"].push_back(fo.exponents);
        const Json params = orbit_json(o, spec.m());
        for (const auto& [k, v] : params.items()) oj[k] = v;
        j["orbits"].push_back(oj);
      }
      out << j.dump() << "\n";
      return 0;
    }
    out << "Step 1: f = ord_" << spec.p() << "(" << ell << ") = " << f << ", K = "
        << decomposition::field_name(ell, f) << "\n";
    out << "Step 2: N = (p - 1)/f = " << frob.size() << " Frobenius orbits:";
    for (const auto& fo : frob) out << " {" << join(fo.exponents, ",") << "}";
    out << "\n";
    out << "Step 3: " << data.size() << " C_" << spec.m() << "-orbit(s) under x -> " << spec.r() << "x\n";
    out << "Step 4/5:\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& o = data[i];
      std::vector<std::string> labels;
      for (auto c : orbits::classify_case(o, spec.m())) labels.push_back(orbits::to_string(c));
      out << "  orbit " << (i + 1) << ":";
      for (const auto& fo : o.member_orbits) out << " {" << join(fo.exponents, ",") << "}";
      out << "\n    t=" << o.t << " h=" << o.h << " k=" << o.k << " s=" << o.s << " d=" << o.d
          << " r_mat=" << o.r_mat << " case=";
      for (std::size_t c = 0; c < labels.size(); ++c) out << (c ? "," : "") << labels[c];
      out << " -> M" << o.matrix_size() << "(" << decomposition::field_name(ell, o.d) << ")\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_h2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::int64_t ell = need(cfg.ell, "ell");
    const std::int64_t m = need(cfg.m, "m");
    const auto h2 = cohomology::h2_structure(ell, m);
    if (cfg.format == Format::Json) {
      Json j;
      j["ell"] = ell;
      j["m"] = m;
      j["order"] = h2.order;
      j["generator"] = h2.generator;
      j["representatives"] = h2.representatives;
      out << j.dump() << "\n";
    } else {
      out << "H^2(C_" << m << ", F_" << ell << "^*) = F_" << ell << "^*/(F_" << ell << "^*)^" << m
          << " has order " << h2.order << "\n";
      out << "generator of F_" << ell << "^*: " << h2.generator << "\n";
      out << "representatives:";
      for (std::size_t c = 0; c < h2.representatives.size(); ++c) {
        out << " " << h2.representatives[c] << " (class " << c << ")";
      }
      out << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::int64_t m = 0;
    bool specialized = true;
    if (cfg.table == "2" || cfg.table == "3" || cfg.table == "4") {
      m = std::stoll(cfg.table);
    } else if (cfg.table == "general") {
      m = need(cfg.m, "m");
      specialized = false;
    } else {
      throw std::invalid_argument("--table must be 2, 3, 4 or general");
    }
    const auto kind = decomposition::table_kind_for(m, specialized);
    const auto report = decomposition::table_report(m, cfg.ell_list, cfg.min_p, cfg.max_p, kind);
    const auto& refs = decomposition::reference_rows(kind);
    if (cfg.format == Format::Json) {
      Json j;
      j["m"] = m;
      j["table"] = cfg.table;
      j["ells"] = cfg.ell_list;
      j["p_range"] = Json::array({cfg.min_p, cfg.max_p});
      j["groups"] = report.groups_checked;
      j["inconsistencies"] = report.inconsistencies;
      j["rows"] = Json::array();
      for (const auto& row : report.rows) {
        Json rj;
        rj["t"] = row.t;
        rj["h"] = row.h;
        rj["s"] = row.s;
        rj["d"] = row.d_formula();
        rj["r_mat"] = row.r_mat;
        rj["component"] = row.component();
        rj["f_values"] = row.f_values;
        rj["witness"] = Json{{"p", row.witness.p}, {"r", row.witness.r}, {"f", row.witness.f}};
        rj["occurrences"] = row.occurrences;
        rj["reference_row"] = row.reference_row ? Json(*row.reference_row) : Json(nullptr);
        j["rows"].push_back(rj);
      }
      j["contained"] = report.contained_in_reference();
      out << j.dump() << "\n";
    } else {
      out << "m = " << m << " (" << (specialized ? "specialized" : "general") << " table), p in [" << cfg.min_p
          << ", " << cfg.max_p << "], l in {" << join(cfg.ell_list, ",") << "}: " << report.groups_checked
          << " groups\n";
      for (const auto& row : report.rows) {
        out << "  t=" << row.t << " h=" << row.h << " s=" << row.s << " d=" << row.d_formula()
            << " r_mat=" << row.r_mat << "  " << row.component() << "  x" << row.occurrences << "  f in {"
            << join(row.f_values, ",") << "}  e.g. p=" << row.witness.p << " r=" << row.witness.r << "  ";
        if (row.reference_row) {
          out << "[row " << (*row.reference_row + 1) << ": " << refs[*row.reference_row].condition << "]\n";
        } else {
          out << "[not in reference table]\n";
        }
      }
      if (report.inconsistencies > 0) out << "inconsistent groups: " << report.inconsistencies << "\n";
      out << "contained in reference table: " << (report.contained_in_reference() ? "yes" : "no") << "\n";
    }
    return report.contained_in_reference() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    scan::ScanOptions options;
    options.min_p = cfg.min_p;
    options.max_p = cfg.max_p;
    options.ells = cfg.ell_list;
    options.oracle_cap = cfg.oracle_cap;
    options.threads = cfg.threads;
    options.associativity =
        cfg.exhaustive_associativity ? oracle::AssociativityCheck::Exhaustive : oracle::AssociativityCheck::Generators;
    const auto tuples = scan::enumerate(options);
    const auto results = scan::run(tuples, options);

    std::int64_t failures = 0;
    std::int64_t oracle_runs = 0;
    for (const auto& res : results) {
      Json j;
      j["p"] = res.tuple.p;
      j["m"] = res.tuple.m;
      j["ell"] = res.tuple.ell;
      j["r"] = res.tuple.r;
      j["lambda"] = res.tuple.lambda;
      j["class_index"] = res.class_index;
      j["engine"] = res.engine ? blocks_json(res.engine->all_blocks()) : Json(nullptr);
      j["oracle"] = res.oracle_blocks ? blocks_json(*res.oracle_blocks) : Json(nullptr);
      j["violations"] = res.violations;
      const std::string error = !res.engine_error.empty() ? res.engine_error : res.oracle_error;
      j["error"] = error.empty() ? Json(nullptr) : Json(error);
      j["ok"] = res.ok();
      out << j.dump() << "\n";
      if (!res.ok()) ++failures;
      if (res.oracle_ran()) ++oracle_runs;
    }
    const auto checked = static_cast<std::int64_t>(results.size());
    if (cfg.format == Format::Json) {
      Json summary;
      summary["tuples"] = checked;
      summary["oracle_runs"] = oracle_runs;
      summary["failures"] = failures;
      out << Json{{"summary", summary}}.dump() << "\n";
    } else {
      out << "checked " << checked << " tuples (" << oracle_runs << " against the oracle), " << failures
          << " failures\n";
    }
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Decompose: return cmd_decompose(cfg, out, err);
    case Command::Orbits: return cmd_orbits(cfg, out, err);
    case Command::H2: return cmd_h2(cfg, out, err);
    case Command::Verify: return cmd_verify(cfg, out, err);
    case Command::Tables: return cmd_tables(cfg, out, err);
    case Command::Scan: return cmd_scan(cfg, out, err);
  }
  return 2;
}

}  // namespace wedderburn::cli
