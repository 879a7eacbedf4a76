// horopack — command-line front end for the horoball packing library.
//
//   horopack list     inventory of the 23 cells (table, csv, or the full JSON
//                     document, which load_catalog round-trips)
//   horopack density  optimal packing report for one cell
//   horopack verify   recompute every density against the recorded values,
//                     optionally cross-checking all volumes by quadrature
//
// Exit codes: 0 success, 1 at least one MISMATCH, 2 usage or input error,
// 3 internal numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <exception>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <horopack/catalog.hpp>
#include <horopack/format.hpp>
#include <horopack/packing.hpp>
#include <horopack/quadrature.hpp>

namespace {

using namespace horopack;

std::string schlafli_of(const CoxeterSimplex& sx) {
  for (const auto& a : sx.aliases)
    if (!a.empty() && a.front() == '[') return a;
  return "-";
}

std::string pretty_angle(const std::string& expr) {
  std::string out;
  for (size_t i = 0; i < expr.size(); ++i) {
    if (expr.compare(i, 4, "lob(") == 0) {
      out += "Λ(";
      i += 3;
    } else if (expr.compare(i, 2, "pi") == 0) {
      out += "π";
      ++i;
    } else {
      out += expr[i];
    }
  }
  return out;
}

std::string volume_form_of(const CoxeterSimplex& sx) {
  const VolumeForm& v = sx.volume;
  if (v.kind == VolumeForm::Kind::Lobachevsky) {
    std::string coeff =
        v.coeff_expr == "1" ? "" : "(" + v.coeff_expr + ")·";
    return coeff + "Λ(" + pretty_angle(v.angle_expr) + ")";
  }
  if (!sx.volume_exact_expr.empty()) return pretty_angle(sx.volume_exact_expr);
  return v.value_text;
}

struct Options {
  std::string catalog_path;
  std::string format = "table";
  double tolerance = 1e-6;
  unsigned seed = 0;
  int samples = 10000;
  int jobs = 0;  // 0 -> all cores
  bool oracle = false;
};

std::vector<CoxeterSimplex> load(const Options& opt) {
  if (opt.catalog_path.empty()) return load_catalog();
  return load_catalog_file(opt.catalog_path);
}

// ---------------------------------------------------------------- list -----

int cmd_list(const Options& opt) {
  auto cat = load(opt);
  if (opt.format == "json") {
    std::cout << catalog_to_json(cat) << "\n";
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << fmt::csv_row(
        {"witt", "id", "schlafli", "class", "n_ideal", "volume", "form"});
    for (const auto& sx : cat)
      std::cout << fmt::csv_row({sx.witt, sx.id, schlafli_of(sx), sx.cls,
                                 std::to_string(sx.n_ideal()),
                                 fmt::sig9(sx.volume_value()),
                                 volume_form_of(sx)});
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"WITT", "ID", "SCHLAFLI", "CLASS", "CUSPS", "VOLUME", "FORM"});
  for (const auto& sx : cat)
    rows.push_back({sx.witt, sx.id, schlafli_of(sx), sx.cls,
                    std::to_string(sx.n_ideal()),
                    fmt::sig9(sx.volume_value()), volume_form_of(sx)});
  std::cout << fmt::render_table(rows);
  std::cout << cat.size() << " cells\n";
  return 0;
}

// ------------------------------------------------------------- density -----

int cmd_density(const Options& opt, const std::string& key) {
  auto cat = load(opt);
  const CoxeterSimplex* sx = find_simplex(cat, key);
  if (!sx) {
    std::cerr << "error: unknown symbol '" << key
              << "' (try `horopack list`)\n";
    return 2;
  }

  std::optional<double> vol;
  std::string source;
  if (sx->has_exact_volume()) {
    vol = sx->volume_value();
    source = "closed";
  } else {
    vol = quadrature_volume(*sx);
    source = "refined";
  }
  OptimalPacking opt_pack = optimize(*sx, vol);
  const PackingResult& res = opt_pack.result;

  double reference = sx->density_value();
  double residual = std::abs(res.density - reference);
  std::string status = residual <= opt.tolerance ? "OK"
                       : sx->flag_on_mismatch    ? "FLAGGED"
                                                 : "MISMATCH";

  std::cout << "witt:         " << sx->witt << "\n";
  std::cout << "id:           " << sx->id << "\n";
  std::cout << "schlafli:     " << schlafli_of(*sx) << "\n";
  std::cout << "class:        " << sx->cls << "\n";
  std::cout << "cell volume:  " << fmt::sig9(res.cell_volume) << "  ("
            << source << ")\n";
  std::cout << "density:      " << fmt::sig9(res.density) << "\n";
  std::cout << "reference:    " << fmt::sig9(reference)
            << "  (residual " << fmt::sci(residual) << ", " << status << ")\n";
  std::cout << "anchor:       vertex " << opt_pack.best.anchor << "\n";
  const auto& cusps = opt_pack.best.cusps;
  for (size_t k = 0; k < cusps.size(); ++k)
    std::cout << "cusp " << cusps[k]
              << ":       s = " << fmt::sig9(opt_pack.best.s[k])
              << ", piece = " << fmt::sig9(res.pieces[k]) << "\n";
  std::cout << "ratios:       " << fmt::ratio_list(res.ratios) << "\n";
  if (opt_pack.maximizers.size() > 1)
    std::cout << "ties:         " << opt_pack.maximizers.size()
              << " anchored optima at equal density\n";

  double sampled = falsify(*sx, opt.samples, opt.seed, vol);
  bool beaten = sampled > res.density + 1e-9;
  std::cout << "sampled:      best of " << opt.samples
            << " random configurations (seed " << opt.seed << ") = "
            << fmt::sig9(sampled)
            << (beaten ? "  ** exceeds reported optimum **"
                       : "  (does not exceed the optimum)")
            << "\n";

  if (beaten || status == "MISMATCH") return 1;
  return 0;
}

// -------------------------------------------------------------- verify -----

struct OracleRow {
  std::string id;
  double quadrature = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

std::vector<OracleRow> run_oracle(const std::vector<CoxeterSimplex>& cat,
                                  int jobs) {
  std::vector<OracleRow> rows(cat.size());
  unsigned hw = std::thread::hardware_concurrency();
  int n_workers = jobs > 0 ? jobs : static_cast<int>(hw ? hw : 1u);
  n_workers = std::min<int>(n_workers, static_cast<int>(cat.size()));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < cat.size(); i = next.fetch_add(1)) {
      const CoxeterSimplex& sx = cat[i];
      OracleRow r;
      r.id = sx.id;
      r.quadrature = quadrature_volume(sx);
      r.reference = sx.volume_value();
      r.residual = std::abs(r.quadrature - r.reference);
      r.bound = sx.has_exact_volume() ? 1e-6 : 1e-5;
      r.pass = r.residual <= r.bound;
      rows[i] = r;
    }
  };
  std::vector<std::future<void>> pool;
  for (int w = 1; w < n_workers; ++w)
    pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  return rows;
}

int cmd_verify(const Options& opt) {
  auto cat = load(opt);
  std::vector<ReportRow> rows = verify_all(cat, opt.tolerance);

  std::vector<OracleRow> oracle;
  std::vector<DecompositionReport> decomps;
  if (opt.oracle) {
    oracle = run_oracle(cat, opt.jobs);
    for (const char* id : {"AV3", "BV3c", "HV3c", "CR3"})
      decomps.push_back(decomposition_check(cat, id));
  }

  int n_ok = 0, n_flagged = 0, n_mismatch = 0;
  for (const auto& r : rows) {
    if (r.status == "OK") ++n_ok;
    else if (r.status == "FLAGGED") ++n_flagged;
    else ++n_mismatch;
  }
  int oracle_failures = 0;
  for (const auto& r : oracle) oracle_failures += r.pass ? 0 : 1;
  for (const auto& d : decomps) oracle_failures += d.pass ? 0 : 1;

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["tolerance"] = opt.tolerance;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["id"] = r.id;
      row["witt"] = r.witt;
      row["class"] = r.cls;
      row["n_ideal"] = r.n_ideal;
      row["density"] = r.density;
      row["paper_density"] = r.paper_density;
      row["residual"] = r.residual;
      row["ratios"] = r.ratios;
      row["anchor"] = r.anchor;
      row["cell_volume"] = r.cell_volume;
      row["volume_source"] = r.volume_source;
      row["status"] = r.status;
      doc["rows"].push_back(row);
    }
    if (opt.oracle) {
      doc["oracle"] = nlohmann::ordered_json::array();
      for (const auto& r : oracle) {
        nlohmann::ordered_json row;
        row["id"] = r.id;
        row["quadrature"] = r.quadrature;
        row["reference"] = r.reference;
        row["residual"] = r.residual;
        row["status"] = r.pass ? "OK" : "MISMATCH";
        doc["oracle"].push_back(row);
      }
      doc["decompositions"] = nlohmann::ordered_json::array();
      for (const auto& d : decomps) {
        nlohmann::ordered_json row;
        row["id"] = d.id;
        row["sum"] = d.sum;
        row["printed"] = d.printed;
        row["quadrature"] = d.quadrature;
        row["residual_printed"] = d.residual_printed;
        row["residual_quadrature"] = d.residual_quadrature;
        row["status"] = d.pass ? "OK" : "MISMATCH";
        doc["decompositions"].push_back(row);
      }
    }
    doc["summary"] = {{"ok", n_ok},
                      {"flagged", n_flagged},
                      {"mismatch", n_mismatch},
                      {"oracle_failures", oracle_failures}};
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << fmt::csv_row({"witt", "class", "n_ideal", "density",
                               "paper_density", "residual", "status",
                               "ratios"});
    for (const auto& r : rows)
      std::cout << fmt::csv_row(
          {r.witt, r.cls, std::to_string(r.n_ideal), fmt::sig9(r.density),
           fmt::sig9(r.paper_density), fmt::sci(r.residual), r.status,
           fmt::ratio_list(r.ratios)});
    if (opt.oracle) {
      std::cout << "\n"
                << fmt::csv_row({"witt", "quadrature", "reference",
                                 "volume_residual", "status"});
      for (size_t i = 0; i < oracle.size(); ++i)
        std::cout << fmt::csv_row({cat[i].witt,
                                   fmt::sig9(oracle[i].quadrature),
                                   fmt::sig9(oracle[i].reference),
                                   fmt::sci(oracle[i].residual),
                                   oracle[i].pass ? "OK" : "MISMATCH"});
      std::cout << "\n"
                << fmt::csv_row({"decomposition", "sum", "reference",
                                 "residual", "status"});
      for (const auto& d : decomps)
        std::cout << fmt::csv_row({d.id, fmt::sig9(d.sum),
                                   fmt::sig9(d.printed),
                                   fmt::sci(d.residual_printed),
                                   d.pass ? "OK" : "MISMATCH"});
    }
  } else {
    std::vector<std::vector<std::string>> table;
    table.push_back({"WITT", "CLASS", "CUSPS", "DENSITY", "REFERENCE",
                     "RESIDUAL", "STATUS", "RATIOS"});
    for (const auto& r : rows)
      table.push_back({r.witt, r.cls, std::to_string(r.n_ideal),
                       fmt::sig9(r.density), fmt::sig9(r.paper_density),
                       fmt::sci(r.residual), r.status,
                       fmt::ratio_list(r.ratios)});
    std::cout << fmt::render_table(table);
    std::cout << rows.size() << " rows: " << n_ok << " OK, " << n_flagged
              << " FLAGGED, " << n_mismatch << " MISMATCH\n";
    if (opt.oracle) {
      std::cout << "\nvolume oracle (adaptive quadrature vs recorded "
                   "values):\n";
      std::vector<std::vector<std::string>> otab;
      otab.push_back(
          {"WITT", "QUADRATURE", "REFERENCE", "RESIDUAL", "STATUS"});
      for (size_t i = 0; i < oracle.size(); ++i)
        otab.push_back({cat[i].witt, fmt::sig9(oracle[i].quadrature),
                        fmt::sig9(oracle[i].reference),
                        fmt::sci(oracle[i].residual),
                        oracle[i].pass ? "OK" : "MISMATCH"});
      std::cout << fmt::render_table(otab);
      std::cout << "\ndissections (independent term-by-term sums):\n";
      std::vector<std::vector<std::string>> dtab;
      dtab.push_back({"CELL", "SUM", "REFERENCE", "RESIDUAL", "STATUS"});
      for (const auto& d : decomps)
        dtab.push_back({d.id, fmt::sig9(d.sum), fmt::sig9(d.printed),
                        fmt::sci(d.residual_printed),
                        d.pass ? "OK" : "MISMATCH"});
      std::cout << fmt::render_table(dtab);
    }
  }

  return (n_mismatch > 0 || oracle_failures > 0) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horoball packing densities of the 23 noncompact Coxeter "
               "simplex tilings of hyperbolic 3-space"};
  app.require_subcommand(1);
  Options opt;

  auto add_catalog = [&](CLI::App* cmd) {
    cmd->add_option("--catalog", opt.catalog_path,
                    "load the cell catalog from a JSON file instead of the "
                    "embedded document");
  };

  CLI::App* list = app.add_subcommand("list", "inventory of all cells");
  list->add_option("--format", opt.format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  add_catalog(list);

  std::string key;
  CLI::App* density = app.add_subcommand(
      "density", "optimal horoball packing report for one cell");
  density->add_option("symbol", key, "cell id, display symbol, or alias")
      ->required();
  density->add_option("--tolerance", opt.tolerance,
                      "allowed |density - reference|");
  density->add_option("--seed", opt.seed, "random seed for the sampled check");
  density->add_option("--samples", opt.samples,
                      "random configurations for the sampled check");
  add_catalog(density);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute every density against the recorded values");
  verify->add_option("--format", opt.format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--tolerance", opt.tolerance,
                     "allowed |density - reference|");
  verify
      ->add_option(
          "--oracle",
          [&opt](const std::vector<std::string>& v) {
            opt.oracle = v.at(0) == "on";
            return true;
          },
          "on: cross-check all volumes by quadrature")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--jobs", opt.jobs,
                     "parallel quadrature evaluations (default: all cores)");
  add_catalog(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is success; anything else is usage
  }

  try {
    if (list->parsed()) return cmd_list(opt);
    if (density->parsed()) return cmd_density(opt, key);
    return cmd_verify(opt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
