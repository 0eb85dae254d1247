// entangle: command-line front end over the C API.
//
// Every subcommand writes <out-dir>/<name>.json (config, rows, fit) and,
// for tabular results, <out-dir>/<name>.csv. The output directory defaults
// to $ENTANGLE_OUT_DIR, else the working directory.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entangle.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
constexpr double kPi = 3.14159265358979323846;

struct Failure {
  int code;
  std::string message;
};

void check(ent_status s) {
  if (s != ENT_OK) throw Failure{static_cast<int>(s), ent_last_error()};
}

struct TableHandle {
  ent_table* t = nullptr;
  ~TableHandle() { ent_table_free(t); }
};

// "0.5pi", "pi", "pi/4", "0.25*pi" or plain radians.
double parse_kf(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '*') s += c;
  try {
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return std::stod(s);
    const std::string coef = s.substr(0, pos);
    const std::string rest = s.substr(pos + 2);
    double v = kPi * (coef.empty() ? 1.0 : std::stod(coef));
    if (!rest.empty()) {
      if (rest[0] != '/') throw std::invalid_argument(text);
      v /= std::stod(rest.substr(1));
    }
    return v;
  } catch (const std::exception&) {
    throw Failure{ENT_ERR_INPUT_DOMAIN, "cannot parse k_f value '" + text + "'"};
  }
}

struct Grid {
  std::vector<long> list;
  long lmin = 0, lmax = 0, lstep = 0;

  void add(CLI::App* app, const std::string& what = "L") {
    std::string lower = what;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    app->add_option("--" + what, list, "explicit " + what + " values")->delimiter(',');
    app->add_option("--" + lower + "min", lmin, "smallest " + what);
    app->add_option("--" + lower + "max", lmax, "largest " + what);
    app->add_option("--" + lower + "step", lstep,
                    "additive step (default: doubling from the minimum)");
  }

  std::vector<long> values() const {
    if (!list.empty()) return list;
    if (lmin < 1 || lmax < lmin)
      throw Failure{ENT_ERR_INPUT_DOMAIN, "grid needs an explicit list or 1 <= min <= max"};
    std::vector<long> v;
    for (long x = lmin; x <= lmax; x = lstep > 0 ? x + lstep : 2 * x) v.push_back(x);
    return v;
  }
};

struct Output {
  std::string dir;
  std::string name;
  std::string format = "both";
  bool fit = false;

  void add(CLI::App* app) {
    app->add_option("--out-dir", dir, "output directory (default $ENTANGLE_OUT_DIR or .)");
    app->add_option("--name", name, "output file stem (default: subcommand name)");
    app->add_option("--format", format, "csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
  }

  std::filesystem::path path(const std::string& cmd, const char* ext) const {
    std::string d = dir;
    if (d.empty()) {
      const char* env = std::getenv("ENTANGLE_OUT_DIR");
      d = env ? env : ".";
    }
    std::filesystem::create_directories(d);
    return std::filesystem::path(d) / ((name.empty() ? cmd : name) + ext);
  }
};

ordered_json table_rows(const ent_table* t) {
  size_t rows = 0, cols = 0;
  check(ent_table_shape(t, &rows, &cols));
  ordered_json out = ordered_json::array();
  for (size_t r = 0; r < rows; ++r) {
    ordered_json row;
    if (const char* label = ent_table_label(t, r)) row["name"] = label;
    for (size_t c = 0; c < cols; ++c) {
      double v;
      check(ent_table_get(t, r, c, &v));
      row[ent_table_column(t, c)] = v;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<double> column(const ent_table* t, size_t col) {
  size_t rows = 0;
  check(ent_table_shape(t, &rows, nullptr));
  std::vector<double> v(rows);
  for (size_t r = 0; r < rows; ++r) check(ent_table_get(t, r, col, &v[r]));
  return v;
}

ordered_json fit_json(const ent_fit& f) {
  return {{"slope", f.slope},
          {"intercept", f.intercept},
          {"rms_residual", f.rms_residual},
          {"n_points", f.n_points}};
}

ordered_json fit_table(const ent_table* t, size_t lcol, size_t scol, int d) {
  const auto L = column(t, lcol), S = column(t, scol);
  ent_fit f{};
  check(ent_fit_area_log(L.data(), S.data(), L.size(), d, &f));
  return fit_json(f);
}

void emit(const Output& out, const std::string& cmd, ordered_json config, ordered_json rows,
          ordered_json fit, const ent_table* table) {
  ordered_json doc;
  config["command"] = cmd;
  doc["config"] = std::move(config);
  doc["rows"] = std::move(rows);
  doc["fit"] = std::move(fit);
  const std::string text = doc.dump(2) + "\n";
  if (table && out.format != "json")
    check(ent_table_write_csv(table, out.path(cmd, ".csv").string().c_str()));
  if (out.format != "csv" || !table) {
    std::ofstream f(out.path(cmd, ".json"), std::ios::binary);
    f << text;
    if (!f) throw Failure{ENT_ERR_RESOURCE, "failed writing JSON output"};
  }
  std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement entropy of free fermions, bosons and ordered spin models"};
  app.require_subcommand(1);
  Output out;
  Grid grid;
  std::string kf_text = "0.5pi";
  double lambda = 2.0, mass = 1e-5;
  long n = 0, n1 = 0;
  int ring = 0, d = 2, fit_d = 1;
  std::string kind = "spherical", suite = "all", input;
  std::string lcol = "L", scol = "entropy";

  auto* fermion = app.add_subcommand("fermion1d", "segment entropy of the infinite free-fermion chain");
  fermion->add_option("--kf", kf_text, "Fermi momentum: radians or multiple of pi (0.5pi)");
  grid.add(fermion);
  fermion->add_flag("--fit", out.fit, "fit S = a ln L + b");
  out.add(fermion);

  auto* fh = app.add_subcommand("fisher-hartwig", "exact vs asymptotic Toeplitz determinants");
  fh->add_option("--kf", kf_text, "Fermi momentum");
  fh->add_option("--lambda", lambda, "spectral parameter, |lambda| > 1");
  grid.add(fh);
  out.add(fh);

  auto* afm = app.add_subcommand("spin-afm", "two-sublattice antiferromagnet");
  afm->add_option("--n", n, "spins per sublattice")->required();
  afm->add_option("--n1", n1, "subsystem spins per sublattice")->required();
  out.add(afm);

  auto* fm = app.add_subcommand("spin-fm", "degenerate ferromagnet (half mutual information)");
  fm->add_option("--n", n, "total spins");
  fm->add_option("--n1", n1, "subsystem spins");
  grid.add(fm, "m");
  fm->add_flag("--fit", out.fit, "fit equal-partition scan against ln m");
  out.add(fm);

  auto* boson = app.add_subcommand("boson1d", "harmonic chain block entropy");
  boson->add_option("--mass", mass, "mass gap m > 0");
  boson->add_option("--ring", ring, "ring size (default: infinite chain)");
  grid.add(boson);
  boson->add_flag("--fit", out.fit, "fit S = a ln L + b");
  out.add(boson);

  auto* highd = app.add_subcommand("fermion-highd", "d-dimensional free-fermion block entropy");
  highd->add_option("--d", d, "dimension");
  highd->add_option("--kind", kind, "cubic or spherical")
      ->check(CLI::IsMember({"cubic", "spherical"}));
  highd->add_option("--kf", kf_text, "Fermi sea radius / half-width");
  grid.add(highd);
  highd->add_flag("--fit", out.fit, "fit S/L^{d-1} = a ln L + b");
  out.add(highd);

  auto* widom = app.add_subcommand("widom", "Widom/Gioev-Klich coefficient");
  widom->add_option("--d", d, "dimension");
  widom->add_option("--kind", kind, "cubic or spherical")
      ->check(CLI::IsMember({"cubic", "spherical"}));
  widom->add_option("--kf", kf_text, "Fermi sea radius / half-width");
  out.add(widom);

  auto* oracle = app.add_subcommand("oracle-check", "fast paths vs brute-force oracles");
  oracle->add_option("--suite", suite, "fermion, spin, boson or all")
      ->check(CLI::IsMember({"fermion", "spin", "boson", "all"}));
  out.add(oracle);

  auto* fit = app.add_subcommand("fit", "log-law fit of a CSV scan");
  fit->add_option("--input", input, "CSV file with L and entropy columns")->required();
  fit->add_option("--d", fit_d, "dimension (fits S/L^{d-1})");
  fit->add_option("--lcol", lcol, "size column name");
  fit->add_option("--scol", scol, "entropy column name");
  out.add(fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ENT_ERR_INPUT_DOMAIN;
  }

  try {
    if (fermion->parsed()) {
      const double kf = parse_kf(kf_text);
      const auto Ls = grid.values();
      TableHandle t;
      check(ent_fermion1d_scan(Ls.data(), Ls.size(), kf, &t.t));
      emit(out, "fermion1d", {{"k_f", kf}, {"L", Ls}}, table_rows(t.t),
           out.fit ? fit_table(t.t, 0, 1, 1) : ordered_json(nullptr), t.t);
    } else if (fh->parsed()) {
      const double kf = parse_kf(kf_text);
      const auto Ls = grid.values();
      TableHandle t;
      check(ent_fh_scan(Ls.data(), Ls.size(), kf, lambda, &t.t));
      emit(out, "fisher-hartwig", {{"k_f", kf}, {"lambda", lambda}, {"L", Ls}}, table_rows(t.t),
           nullptr, t.t);
    } else if (afm->parsed()) {
      double exact = 0.0, asym = 0.0;
      check(ent_spin_afm(n, n1, &exact, &asym));
      ordered_json row{{"n", n}, {"n1", n1}, {"exact", exact}};
      if (std::isnan(asym)) {
        row["asymptotic"] = nullptr;
        row["gap"] = nullptr;
      } else {
        row["asymptotic"] = asym;
        row["gap"] = std::abs(exact - asym);
      }
      emit(out, "spin-afm", {{"n", n}, {"n1", n1}}, ordered_json::array({row}), nullptr, nullptr);
    } else if (fm->parsed()) {
      if (!grid.list.empty() || grid.lmin > 0) {
        const auto ms = grid.values();
        TableHandle t;
        check(ent_spin_fm_equal_scan(ms.data(), ms.size(), &t.t));
        emit(out, "spin-fm", {{"m", ms}}, table_rows(t.t),
             out.fit ? fit_table(t.t, 0, 1, 1) : ordered_json(nullptr), t.t);
      } else {
        double e = 0.0;
        check(ent_spin_fm(n, n1, &e));
        emit(out, "spin-fm", {{"n", n}, {"n1", n1}},
             ordered_json::array({{{"n", n}, {"n1", n1}, {"entropy", e}}}), nullptr, nullptr);
      }
    } else if (boson->parsed()) {
      const auto Ls = grid.values();
      TableHandle t;
      check(ent_boson_scan(mass, ring, Ls.data(), Ls.size(), &t.t));
      emit(out, "boson1d", {{"mass", mass}, {"ring", ring}, {"L", Ls}}, table_rows(t.t),
           out.fit ? fit_table(t.t, 0, 1, 1) : ordered_json(nullptr), t.t);
    } else if (highd->parsed()) {
      const double kf = parse_kf(kf_text);
      const auto Ls = grid.values();
      TableHandle t;
      check(ent_highd_scan(d, kind == "cubic" ? ENT_SEA_CUBIC : ENT_SEA_SPHERICAL, kf, Ls.data(),
                           Ls.size(), &t.t));
      emit(out, "fermion-highd", {{"d", d}, {"kind", kind}, {"k_f", kf}, {"L", Ls}},
           table_rows(t.t), out.fit ? fit_table(t.t, 0, 1, d) : ordered_json(nullptr), t.t);
    } else if (widom->parsed()) {
      const double kf = parse_kf(kf_text);
      double numeric = 0.0, analytic = 0.0;
      check(ent_widom(d, kind == "cubic" ? ENT_SEA_CUBIC : ENT_SEA_SPHERICAL, kf, &numeric,
                      &analytic));
      emit(out, "widom", {{"d", d}, {"kind", kind}, {"k_f", kf}},
           ordered_json::array({{{"numeric", numeric},
                                 {"analytic", analytic},
                                 {"abs_diff", std::abs(numeric - analytic)}}}),
           nullptr, nullptr);
    } else if (oracle->parsed()) {
      TableHandle t;
      check(ent_oracle_check(suite.c_str(), &t.t));
      const auto passed = column(t.t, 4);
      bool all_ok = true;
      for (double p : passed) all_ok = all_ok && p == 1.0;
      emit(out, "oracle-check", {{"suite", suite}}, table_rows(t.t), nullptr, t.t);
      if (!all_ok) {
        std::cerr << "oracle-check: at least one equivalence check failed\n";
        return ENT_ERR_NUMERICAL;
      }
    } else if (fit->parsed()) {
      TableHandle t;
      check(ent_table_read_csv(input.c_str(), &t.t));
      size_t cols = 0;
      check(ent_table_shape(t.t, nullptr, &cols));
      std::optional<size_t> li, si;
      for (size_t c = 0; c < cols; ++c) {
        if (lcol == ent_table_column(t.t, c)) li = c;
        if (scol == ent_table_column(t.t, c)) si = c;
      }
      if (!li || !si) throw Failure{ENT_ERR_INPUT_DOMAIN, "input lacks the requested columns"};
      emit(out, "fit", {{"input", input}, {"d", fit_d}, {"lcol", lcol}, {"scol", scol}},
           ordered_json::array(), fit_table(t.t, *li, *si, fit_d), nullptr);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ENT_ERR_INTERNAL;
  }
  return 0;
}
