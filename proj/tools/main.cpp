// Copyright 2026 The pathspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "format.hpp"
#include "pathspec/pathspec.h"

namespace fs = std::filesystem;
using pathspec::cli::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kAssertion = 3, kDegenerate = 4 };

struct Options {
  unsigned long n = 0;
  std::string graph = "path";
  std::string c = "fib";
  std::string out;
  std::string svg;
  std::string out_dir;
  unsigned precision = 128;
  std::optional<unsigned> max_precision;
  std::optional<double> tol;
  std::string suite;
  unsigned long n_min = 1;
  unsigned long n_max = 0;
  unsigned long step = 1;
};

struct Failure {
  int code;
  std::string message;
};

int exit_for(pathspec_status s) {
  switch (s) {
    case PATHSPEC_OK: return kOk;
    case PATHSPEC_ERR_INVALID_ARGUMENT: return kUsage;
    case PATHSPEC_ERR_DEGENERATE_GEOMETRY: return kDegenerate;
    default: return kComputation;
  }
}

void check(pathspec_status s) {
  if (s != PATHSPEC_OK)
    throw Failure{exit_for(s), std::string(pathspec_status_name(s)) + ": " + pathspec_last_error()};
}

template <class F>
std::string read_text(F&& call) {
  size_t needed = 0;
  pathspec_status s = call(nullptr, 0, &needed);
  if (s != PATHSPEC_OK && s != PATHSPEC_ERR_BUFFER_TOO_SMALL) check(s);
  std::string text(needed + 1, '\0');
  check(call(text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

std::string fibonacci(unsigned long n) {
  return read_text([n](char* b, size_t cap, size_t* need) { return pathspec_fibonacci(n, b, cap, need); });
}

const char* constant_arg(const Options& o) { return o.c == "fib" ? nullptr : o.c.c_str(); }

std::string constant_for(const Options& o, unsigned long n) { return o.c == "fib" ? fibonacci(n + 1) : o.c; }

pathspec_solve_config solve_config(const Options& o, bool use_tol) {
  pathspec_solve_config cfg;
  pathspec_solve_config_init(&cfg);
  cfg.start_bits = o.precision;
  if (o.max_precision) cfg.max_bits = *o.max_precision;
  if (use_tol && o.tol) cfg.tolerance = *o.tol;
  return cfg;
}

Json meta(const std::string& command, const Options& o) {
  Json config;
  config["command"] = command;
  if (command == "sweep" || command == "verify") {
    config["n_min"] = o.n_min;
    config["n_max"] = o.n_max;
    if (command == "sweep") config["step"] = o.step;
    else config["suite"] = o.suite;
  } else {
    config["n"] = o.n;
  }
  if (command == "poly") config["graph"] = o.graph;
  else config["c"] = o.c;
  config["precision_bits"] = o.precision;
  if (o.max_precision) config["max_precision_bits"] = *o.max_precision;
  if (o.tol) config["tol"] = *o.tol;
  Json m;
  m["version"] = pathspec_version();
  m["config"] = config;
  return m;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Failure{kComputation, "cannot write " + path.string()};
}

// stdout, or <out_dir>/<name> when --out-dir is given.
void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out_dir.empty()) {
    std::cout << text;
  } else {
    write_file(fs::path(o.out_dir) / name, text);
  }
}

struct Solved {
  std::string c;
  std::vector<pathspec_root> roots;
  unsigned precision_bits = 0;
  double residual_bound = 0.0;
};

Solved solve(const Options& o) {
  const pathspec_solve_config cfg = solve_config(o, true);
  pathspec_rootset* set = nullptr;
  check(pathspec_solve(o.n, constant_arg(o), &cfg, &set));
  std::unique_ptr<pathspec_rootset, decltype(&pathspec_rootset_free)> guard(set, pathspec_rootset_free);
  Solved out;
  out.c = read_text([set](char* b, size_t cap, size_t* need) { return pathspec_rootset_constant(set, b, cap, need); });
  out.roots.resize(pathspec_rootset_size(set));
  for (size_t i = 0; i < out.roots.size(); ++i) check(pathspec_rootset_get(set, i, &out.roots[i]));
  out.precision_bits = pathspec_rootset_precision_bits(set);
  out.residual_bound = pathspec_rootset_residual_bound(set);
  return out;
}

int cmd_poly(const Options& o) {
  const pathspec_poly_family family = o.graph == "cycle" ? PATHSPEC_POLY_CYCLE : PATHSPEC_POLY_PATH;
  pathspec_poly* p = nullptr;
  check(pathspec_poly_create(family, o.n, &p));
  std::unique_ptr<pathspec_poly, decltype(&pathspec_poly_free)> guard(p, pathspec_poly_free);
  const std::string coeffs =
      read_text([p](char* b, size_t cap, size_t* need) { return pathspec_poly_serialize(p, b, cap, need); });
  const std::string pretty =
      read_text([p](char* b, size_t cap, size_t* need) { return pathspec_poly_pretty(p, "λ", b, cap, need); });
  if (o.out == "json") {
    Json r;
    r["n"] = o.n;
    r["graph"] = o.graph;
    r["coefficients"] = coeffs;
    r["polynomial"] = pretty;
    Json doc;
    doc["meta"] = meta("poly", o);
    doc["results"] = Json::array({r});
    emit(o, "poly.json", pathspec::cli::dump(doc) + "\n");
  } else if (o.out == "csv") {
    emit(o, "poly.csv", "n,graph,coefficients\n" + std::to_string(o.n) + ',' + o.graph + ',' + coeffs + "\n");
  } else {
    emit(o, "poly.txt", coeffs + "\n" + pretty + "\n");
  }
  return kOk;
}

int cmd_roots(const Options& o) {
  const Solved s = solve(o);
  if (o.out == "json") {
    Json results = Json::array();
    for (const pathspec_root& r : s.roots) {
      Json j;
      j["re"] = r.re;
      j["im"] = r.im;
      j["residual"] = r.residual;
      j["error_estimate"] = r.error_estimate;
      j["coincident"] = r.coincident != 0;
      results.push_back(j);
    }
    Json doc;
    doc["meta"] = meta("roots", o);
    doc["meta"]["n"] = o.n;
    doc["meta"]["c"] = s.c;
    doc["meta"]["precision_bits"] = s.precision_bits;
    doc["meta"]["residual_bound"] = s.residual_bound;
    doc["results"] = results;
    emit(o, "roots.json", pathspec::cli::dump(doc) + "\n");
  } else {
    std::vector<pathspec::cli::RootRow> rows;
    for (const pathspec_root& r : s.roots) rows.push_back({o.n, s.c, r.re, r.im, r.residual});
    emit(o, "roots.csv", pathspec::cli::roots_csv(rows));
  }
  return kOk;
}

int cmd_fit(const Options& o) {
  const Solved s = solve(o);
  std::vector<pathspec_point> pts;
  for (const pathspec_root& r : s.roots) pts.push_back({r.re, r.im});
  pathspec_ellipse_fit f;
  check(pathspec_fit_ellipse(pts.data(), pts.size(), &f));

  if (o.out == "csv") {
    using pathspec::cli::number;
    emit(o, "fit.csv",
         "n,c,a_tilde,b_tilde,rmse,eccentricity\n" + std::to_string(o.n) + ',' + s.c + ',' + number(f.a_tilde) + ',' +
             number(f.b_tilde) + ',' + number(f.rmse) + ',' + number(f.eccentricity) + "\n");
  } else {
    Json r;
    r["n"] = o.n;
    r["c"] = s.c;
    r["a_tilde"] = f.a_tilde;
    r["b_tilde"] = f.b_tilde;
    r["rmse"] = f.rmse;
    r["eccentricity"] = f.eccentricity;
    Json doc;
    doc["meta"] = meta("fit", o);
    doc["results"] = Json::array({r});
    emit(o, "fit.json", pathspec::cli::dump(doc) + "\n");
  }

  if (!o.svg.empty()) {
    std::vector<pathspec::cli::PlotPoint> plot;
    for (const pathspec_point& p : pts) plot.push_back({p.re, p.im});
    const std::vector<pathspec::cli::PlotEllipse> ellipses = {
        {f.a_tilde, f.b_tilde, "fitted", "#c0392b"},
        {std::sqrt(5.0), 1.0, "reference", "#27ae60"},
    };
    write_file(o.svg, pathspec::cli::svg_plot(plot, ellipses, "n = " + std::to_string(o.n) + ", c = " + s.c));
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  if (!pathspec_is_suite(o.suite.c_str())) throw Failure{kUsage, "unknown suite '" + o.suite + "'"};
  const pathspec_solve_config cfg = solve_config(o, false);
  pathspec_report_list* list = nullptr;
  check(pathspec_verify(o.suite.c_str(), o.n_min, o.n_max, o.tol.value_or(1e-9), constant_arg(o), &cfg, &list));
  std::unique_ptr<pathspec_report_list, decltype(&pathspec_report_list_free)> guard(list, pathspec_report_list_free);

  Json results = Json::array();
  size_t failed = 0;
  for (size_t i = 0; i < pathspec_report_list_size(list); ++i) {
    results.push_back(Json::parse(pathspec_report_json(list, i)));
    if (pathspec_report_asserted(list, i) && !pathspec_report_passed(list, i)) ++failed;
  }
  Json doc;
  doc["meta"] = meta("verify", o);
  doc["meta"]["reports"] = results.size();
  doc["meta"]["failed_assertions"] = failed;
  doc["results"] = results;
  emit(o, "verify.json", pathspec::cli::dump(doc) + "\n");
  if (failed > 0) {
    std::cerr << "pathspec: " << failed << " asserted check(s) failed\n";
    return kAssertion;
  }
  return kOk;
}

int cmd_sweep(Options o) {
  if (o.out_dir.empty()) o.out_dir = ".";
  const pathspec_solve_config cfg = solve_config(o, true);
  pathspec_sweep* sw = nullptr;
  check(pathspec_sweep_run(o.n_min, o.n_max, o.step, constant_arg(o), &cfg, &sw));
  std::unique_ptr<pathspec_sweep, decltype(&pathspec_sweep_free)> guard(sw, pathspec_sweep_free);

  std::vector<pathspec::cli::SweepLine> lines;
  bool solver_failed = false;
  for (size_t i = 0; i < pathspec_sweep_size(sw); ++i) {
    pathspec_sweep_row r;
    check(pathspec_sweep_get(sw, i, &r));
    pathspec::cli::SweepLine l;
    l.n = r.n;
    l.c = constant_for(o, r.n);
    l.a_tilde = r.a_tilde;
    l.b_tilde = r.b_tilde;
    l.rmse = r.rmse;
    l.eccentricity = r.eccentricity;
    l.boundary_residual = r.boundary_residual;
    l.max_re = r.max_re;
    l.max_im = r.max_im;
    l.precision_bits = r.precision_bits;
    l.solved = r.solved != 0;
    l.fitted = r.fitted != 0;
    if (r.error != PATHSPEC_OK) l.error = pathspec_status_name(r.error);
    if (!l.solved) solver_failed = true;
    lines.push_back(std::move(l));
  }

  Json results = Json::array();
  for (const auto& l : lines) results.push_back(pathspec::cli::sweep_row_json(l));
  Json doc;
  doc["meta"] = meta("sweep", o);
  doc["results"] = results;
  const std::string csv = pathspec::cli::sweep_csv(lines);
  write_file(fs::path(o.out_dir) / "sweep.csv", csv);
  write_file(fs::path(o.out_dir) / "sweep.json", pathspec::cli::dump(doc) + "\n");
  std::cout << csv;
  if (solver_failed) {
    std::cerr << "pathspec: some orders could not be solved; see the error markers\n";
    return kComputation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-graph characteristic polynomials, shifted roots and ellipse fits", "pathspec"};
  app.set_version_flag("--version", std::string(pathspec_version()));
  app.require_subcommand(1);

  Options o;
  if (const char* env = std::getenv("PATHSPEC_PRECISION"); env && *env) {
    try {
      size_t used = 0;
      const unsigned long bits = std::stoul(env, &used);
      if (used != std::string(env).size() || bits < 53 || bits > (1ul << 20)) throw std::invalid_argument(env);
      o.precision = static_cast<unsigned>(bits);
    } catch (const std::exception&) {
      std::cerr << "pathspec: PATHSPEC_PRECISION must be an integer >= 53, got '" << env << "'\n";
      return kUsage;
    }
  }

  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--precision", o.precision, "Starting precision in bits (env PATHSPEC_PRECISION)")
        ->check(CLI::Range(53u, 1u << 20));
    cmd->add_option("--max-precision", o.max_precision, "Give up beyond this many bits (default 16384)")
        ->check(CLI::Range(53u, 1u << 20));
  };
  auto add_output = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--out", o.out, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out-dir", o.out_dir, "Write files here instead of stdout");
  };

  auto* poly = app.add_subcommand("poly", "Characteristic polynomial of a path or cycle graph");
  poly->add_option("--n", o.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  poly->add_option("--graph", o.graph, "Graph family")->check(CLI::IsMember({"path", "cycle"}));
  add_output(poly, {"text", "csv", "json"});

  auto* roots = app.add_subcommand("roots", "All complex roots of f_n(x) = c");
  roots->add_option("--n", o.n, "Degree")->required()->check(CLI::PositiveNumber);
  roots->add_option("--c", o.c, "Constant: 'fib' for F_{n+1}, or an integer");
  roots->add_option("--tol", o.tol, "Solver tolerance (default 1e-12)")->check(CLI::PositiveNumber);
  add_solver(roots);
  add_output(roots, {"csv", "json"});

  auto* fit = app.add_subcommand("fit", "Least-squares axis-aligned ellipse through the roots");
  fit->add_option("--n", o.n, "Degree")->required()->check(CLI::PositiveNumber);
  fit->add_option("--c", o.c, "Constant: 'fib' for F_{n+1}, or an integer");
  fit->add_option("--tol", o.tol, "Solver tolerance (default 1e-12)")->check(CLI::PositiveNumber);
  fit->add_option("--svg", o.svg, "Also plot roots and ellipses to this SVG file");
  add_solver(fit);
  add_output(fit, {"csv", "json"});

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 3 if an asserted check fails");
  verify->add_option("--suite", o.suite, "lemma|imaginary|realcount|containment|eq1|pell|conjecture|cycle|all")
      ->required();
  std::optional<unsigned long> single_n;
  verify->add_option("--n", single_n, "Shorthand for --n-min N --n-max N")->check(CLI::PositiveNumber);
  verify->add_option("--n-min", o.n_min, "First order (default 1)")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", o.n_max, "Last order")->check(CLI::PositiveNumber);
  verify->add_option("--c", o.c, "Constant for the containment suite (default fib)");
  verify->add_option("--tol", o.tol, "Tolerance of numeric checks (default 1e-9)")->check(CLI::NonNegativeNumber);
  add_solver(verify);
  add_output(verify, {"json"});

  auto* sweep = app.add_subcommand("sweep", "Solve and fit over a range of degrees; writes sweep.csv and sweep.json");
  sweep->add_option("--n-min", o.n_min, "First degree")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--n-max", o.n_max, "Last degree")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--step", o.step, "Degree step (default 1)")->check(CLI::PositiveNumber);
  sweep->add_option("--c", o.c, "Constant: 'fib' for F_{n+1}, or an integer");
  sweep->add_option("--tol", o.tol, "Solver tolerance (default 1e-12)")->check(CLI::PositiveNumber);
  add_solver(sweep);
  add_output(sweep, {"csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      if (single_n) o.n_min = o.n_max = *single_n;
      if (o.n_max == 0) throw Failure{kUsage, "verify needs --n or --n-max"};
    }
    if ((*verify || *sweep) && o.n_min > o.n_max) throw Failure{kUsage, "--n-min exceeds --n-max"};
    if (o.max_precision && *o.max_precision < o.precision)
      throw Failure{kUsage, "--max-precision is below the starting precision"};

    if (*poly) return cmd_poly(o);
    if (*roots) return cmd_roots(o);
    if (*fit) return cmd_fit(o);
    if (*verify) return cmd_verify(o);
    return cmd_sweep(o);
  } catch (const Failure& f) {
    std::cerr << "pathspec: error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "pathspec: error: " << e.what() << "\n";
    return kComputation;
  }
}
