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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path to the pathspec executable>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "fit.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "poly.hpp"
#include "root_checks.hpp"
#include "roots.hpp"
#include "seq.hpp"
#include "verify.hpp"

using namespace pathspec;

namespace {

const double kSqrt5 = std::sqrt(5.0);

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const verify::Analysis& analysis(std::uint64_t n) {
  static std::map<std::uint64_t, verify::Analysis> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, verify::analyze(n, std::nullopt)).first;
  return it->second;
}

// ---- 1 --------------------------------------------------------------------

std::string polynomial_identities() {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const IntPolynomial closed = poly::path_charpoly(n);
    expect(closed == poly::path_charpoly_recursive(n), "recursion differs at n=" + std::to_string(n));
    expect(closed == poly::compose_u_neg_half(n), "U_n(-x/2) differs at n=" + std::to_string(n));
    if (n <= 12) expect(closed.coeffs() == oracle::charpoly(oracle::path_matrix(n)),
                        "determinant differs at n=" + std::to_string(n));
  }
  return "n=1..500 three constructions agree, determinant agrees for n<=12";
}

// ---- 2 --------------------------------------------------------------------

std::string lemma() {
  for (std::uint64_t n = 1; n <= 2000; ++n)
    expect(poly::lemma_fib_check(n).passed, "lemma fails at n=" + std::to_string(n));
  return "U_n(-i/2) = i^{3n} F_{n+1} exactly for n=1..2000";
}

// ---- 3 --------------------------------------------------------------------

std::string containment() {
  double worst_form = 0, worst_re = 0, worst_im = 0;
  for (std::uint64_t n = 4; n <= 200; n += 4) {
    const Report r = verify::containment_check(n);
    const std::string at = " at n=" + std::to_string(n);
    expect(r.asserted && r.passed, "containment fails" + at + ": " + r.witnesses.dump());
    const double form = r.witnesses["max_ellipse_form"].get<double>();
    const double re = r.witnesses["max_abs_re"].get<double>();
    const double im = r.witnesses["max_abs_im"].get<double>();
    expect(form <= 1 + 1e-9, "Re^2/5 + Im^2 = " + fmt(form) + at);
    expect(re <= kSqrt5 + 1e-9, "|Re| = " + fmt(re) + at);
    expect(im <= 1 + 1e-9, "|Im| = " + fmt(im) + at);
    worst_form = std::max(worst_form, form);
    worst_re = std::max(worst_re, re);
    worst_im = std::max(worst_im, im);
  }
  return "n=4,8..200: max form " + fmt(worst_form) + ", max |Re| " + fmt(worst_re) + ", max |Im| " + fmt(worst_im);
}

// ---- 4 --------------------------------------------------------------------

std::string pell_counts() {
  int checked = 0;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const BigInt p = seq::pell(n + 1);
    for (const BigInt& c : {BigInt(p), BigInt(-p), BigInt(p + 1), BigInt(-p - 1), BigInt(2 * p), BigInt(-2 * p)}) {
      const Report r = verify::pell_bound_check(n, c);
      expect(r.asserted, "n=" + std::to_string(n) + " c=" + c.get_str() + " outside the hypotheses");
      expect(r.passed, "n=" + std::to_string(n) + " c=" + c.get_str() + ": " + r.witnesses.dump());
      ++checked;
    }
  }
  return std::to_string(checked) + " exact counts for n<=40";
}

// ---- 5 --------------------------------------------------------------------

std::string real_counts() {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const Report r = verify::real_count_conjecture_check(n);
    expect(r.passed, "n=" + std::to_string(n) + ": " + r.witnesses.dump());
  }
  return "two real roots for even n, one negative root for odd n, n=1..60";
}

// ---- 6 --------------------------------------------------------------------

std::string imaginary_roots() {
  const auto samples = verify::default_imaginary_samples();
  for (std::uint64_t k = 1; k <= 50; ++k) {
    const Report r = verify::imaginary_root_check(k, samples);
    expect(r.passed, "k=" + std::to_string(k) + ": " + r.witnesses.dump());
  }
  return "f_{4k}(±i) = F_{4k+1} and f_{4k}(ai) != F_{4k+1} for a in ±1/2, ±3/2, ±2, k=1..50";
}

// ---- 7 --------------------------------------------------------------------

std::string rmse_trend() {
  std::string detail;
  for (std::uint64_t n : {5, 10, 20, 40, 80, 160}) {
    const auto& a = analysis(n);
    expect(a.fit.has_value(), "no fit at n=" + std::to_string(n));
    detail += (detail.empty() ? "rmse " : ", ") + std::to_string(n) + ":" + fmt(a.fit->rmse);
  }
  const double first = analysis(5).fit->rmse, last = analysis(160).fit->rmse;
  expect(last < first, "rmse(160) " + fmt(last) + " >= rmse(5) " + fmt(first));
  expect(last <= 1e-3, "rmse(160) " + fmt(last) + " > 1e-3");
  return detail;
}

// ---- 8 --------------------------------------------------------------------

std::string stabilization() {
  std::string detail;
  for (std::uint64_t n : {100, 200}) {
    const auto& a = analysis(n);
    expect(a.fit.has_value(), "no fit at n=" + std::to_string(n));
    const double at = a.fit->a_tilde, bt = a.fit->b_tilde;
    expect(std::abs(at - kSqrt5) <= 0.05, "a_tilde " + fmt(at) + " at n=" + std::to_string(n));
    expect(bt >= 0.95 && bt <= 1.05, "b_tilde " + fmt(bt) + " at n=" + std::to_string(n));
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " a~=" + fmt(at) +
              " b~=" + fmt(bt);
  }
  return detail;
}

// ---- 9 --------------------------------------------------------------------

std::string boundary_trend() {
  std::string detail;
  double previous = INFINITY;
  for (std::uint64_t n : {20, 40, 80, 160}) {
    const double r = analysis(n).boundary_residual;
    expect(r <= previous * 1.1, "boundary residual rises to " + fmt(r) + " at n=" + std::to_string(n));
    previous = r;
    detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ":" + fmt(r);
  }
  return detail + " (1e-4 magnitude recorded, not asserted)";
}

// ---- 10 -------------------------------------------------------------------

std::string solver_properties() {
  int sets = 0;
  auto check = [&](const ShiftedProblem& p) {
    const RootSet set = solve(p);
    const std::string v = root_checks::rootset_violation(p, set);
    expect(v.empty(), v + " at n=" + std::to_string(p.n) + " c=" + p.c.get_str());
    ++sets;
    return set;
  };
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const BigInt f = seq::fibonacci(n + 1), p = seq::pell(n + 1);
    for (const BigInt& c : {f, BigInt(-f), p, BigInt(-p), BigInt(1000)}) check(ShiftedProblem::make(n, c));
  }
  for (std::uint64_t n : {64, 101, 150}) check(ShiftedProblem::fibonacci(n));

  double worst = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const RootSet set = check(ShiftedProblem::make(n, 0));
    const auto pts = set.points();
    const auto expected = oracle::path_spectrum(n);
    for (std::size_t s = 0; s < n; ++s) {
      const double d = std::max(std::abs(pts[s].re - expected[s]), std::abs(pts[s].im));
      expect(d <= 1e-10, "c=0 root " + std::to_string(s) + " off by " + fmt(d) + " at n=" + std::to_string(n));
      worst = std::max(worst, d);
    }
  }
  return std::to_string(sets) + " root sets satisfy residual, conjugate and Vieta checks; c=0 max deviation " +
         fmt(worst);
}

// ---- 11 -------------------------------------------------------------------

bool degenerate(const std::vector<Point>& pts) {
  try {
    fit::fit_ellipse(pts);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::DegenerateGeometry;
  }
  return false;
}

std::string fit_properties() {
  oracle::Gen g(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = g.real(0.2, 5), b = g.real(0.2, 5);
    std::vector<Point> pts;
    const int m = static_cast<int>(g.integer(3, 40));
    for (int k = 0; k < m; ++k) {
      const double t = g.real(0, 2 * std::numbers::pi);
      pts.push_back({a * std::cos(t), b * std::sin(t)});
    }
    // Clouds hugging one axis are legitimately ill-conditioned; skip them.
    double sx = 0, sy = 0;
    for (const Point& p : pts) sx += std::abs(p.re) / a, sy += std::abs(p.im) / b;
    if (sx < 0.5 || sy < 0.5) continue;
    const fit::EllipseFit f = fit::fit_ellipse(pts);
    expect(std::abs(f.a_tilde - a) <= 1e-8 * a && std::abs(f.b_tilde - b) <= 1e-8 * b,
           "exact recovery fails for a=" + fmt(a) + " b=" + fmt(b));
    expect(f.rmse <= 1e-10, "exact cloud rmse " + fmt(f.rmse));

    const double s = g.real(0.1, 10);
    std::vector<Point> scaled;
    for (const Point& p : pts) scaled.push_back({s * p.re, s * p.im});
    const fit::EllipseFit fs = fit::fit_ellipse(scaled);
    expect(std::abs(fs.a_tilde - s * f.a_tilde) <= 1e-9 * s * f.a_tilde, "scale covariance of a_tilde");
    expect(std::abs(fs.b_tilde - s * f.b_tilde) <= 1e-9 * s * f.b_tilde, "scale covariance of b_tilde");

    std::vector<Point> noisy;
    for (const Point& p : pts) noisy.push_back({p.re + g.real(-0.05, 0.05), p.im + g.real(-0.05, 0.05)});
    try {
      const fit::EllipseFit fn = fit::fit_ellipse(noisy);
      const double r = fit::normal_equation_residual(noisy, fn.coeff_a, fn.coeff_b);
      expect(r <= 1e-8, "normal-equation residual " + fmt(r));
    } catch (const Error& e) {
      expect(e.kind() == ErrorKind::DegenerateGeometry, "unexpected error on a noisy cloud");
    }
  }
  expect(degenerate({{1, 0}, {2, 0}, {-3, 0}}), "collinear real cloud accepted");
  expect(degenerate({{0, 1}, {0, -2}}), "imaginary-axis cloud accepted");
  expect(degenerate({{1.5, 0.5}}), "single point accepted");
  expect(degenerate({{0, 0}, {0, 0}}), "zero cloud accepted");
  // x^2 - y^2 = 1 forces a negative coefficient.
  expect(degenerate({{1, 0}, {std::sqrt(2.0), 1}, {std::sqrt(5.0), 2}, {-std::sqrt(10.0), 3}}), "hyperbola accepted");
  bool empty_rejected = false;
  try {
    fit::fit_ellipse(std::vector<Point>{});
  } catch (const Error& e) {
    empty_rejected = e.kind() == ErrorKind::InvalidArgument;
  }
  expect(empty_rejected, "empty cloud not rejected as InvalidArgument");
  return "exact recovery, scale covariance and normal-equation residual over 500 random clouds; degenerate inputs "
         "rejected";
}

// ---- 12 -------------------------------------------------------------------

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& exe, const std::string& args) {
  const std::string cmd = "'" + exe + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw Failure("cannot start " + cmd);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

std::string cli_contract(const std::string& exe) {
  expect(!exe.empty() && std::filesystem::exists(exe), "CLI executable not found: '" + exe + "'");

  const std::vector<std::string> repeated = {
      "poly --n 12 --out json",        "roots --n 37 --out csv",   "roots --n 21 --c -1000 --out json",
      "fit --n 13 --out json",         "fit --n 13 --c 3 --out csv", "verify --suite lemma --n-max 40",
      "verify --suite containment --n 4 --c 1000",
  };
  for (const auto& args : repeated) {
    const Run a = run(exe, args), b = run(exe, args);
    expect(!a.out.empty(), "no output from '" + args + "'");
    expect(a.out == b.out && a.status == b.status, "'" + args + "' differs between runs");
  }
  const auto dir = std::filesystem::temp_directory_path() / ("pathspec_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir / "a");
  std::filesystem::create_directories(dir / "b");
  const Run sa = run(exe, "sweep --n-min 1 --n-max 9 --out-dir '" + (dir / "a").string() + "'");
  const Run sb = run(exe, "sweep --n-min 1 --n-max 9 --out-dir '" + (dir / "b").string() + "'");
  const bool same_sweep = sa.status == 0 && sa.out == sb.out &&
                          slurp(dir / "a" / "sweep.csv") == slurp(dir / "b" / "sweep.csv") &&
                          slurp(dir / "a" / "sweep.json") == slurp(dir / "b" / "sweep.json") &&
                          !slurp(dir / "a" / "sweep.json").empty();
  std::filesystem::remove_all(dir);
  expect(same_sweep, "sweep outputs differ between runs");

  const std::vector<std::pair<std::string, int>> statuses = {
      {"roots --n 4", 0},
      {"verify --suite no-such-suite --n 4", 1},
      {"roots --c 5", 1},
      {"roots --n 5 --precision 64 --max-precision 64", 2},
      {"verify --suite containment --n 4 --c 1000", 3},
      {"fit --n 2", 4},
  };
  for (const auto& [args, want] : statuses) {
    const int got = run(exe, args).status;
    expect(got == want, "'" + args + "' exited " + std::to_string(got) + ", expected " + std::to_string(want));
  }

  // Roots written as CSV, read back and re-fitted, against the in-process
  // solve and the CLI's own fit.
  const Run csv = run(exe, "roots --n 40 --out csv");
  expect(csv.status == 0, "roots CSV run failed");
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  expect(line == "n,c,re,im,residual", "unexpected CSV header '" + line + "'");
  std::vector<Point> parsed;
  while (std::getline(lines, line)) {
    const auto cells = split(line, ',');
    expect(cells.size() == 5, "malformed CSV row '" + line + "'");
    parsed.push_back({std::stod(cells[2]), std::stod(cells[3])});
  }
  const auto direct = solve(ShiftedProblem::fibonacci(40)).points();
  expect(parsed.size() == direct.size(), "CSV row count");
  double worst = 0;
  for (std::size_t i = 0; i < parsed.size(); ++i)
    worst = std::max({worst, std::abs(parsed[i].re - direct[i].re), std::abs(parsed[i].im - direct[i].im)});
  expect(worst <= 1e-12, "CSV roots drift by " + fmt(worst));

  const fit::EllipseFit refit = fit::fit_ellipse(parsed);
  const auto doc = nlohmann::json::parse(run(exe, "fit --n 40 --out json").out);
  const auto& row = doc["results"][0];
  double fit_drift = 0;
  for (const auto& [key, value] : {std::pair<const char*, double>{"a_tilde", refit.a_tilde},
                                   {"b_tilde", refit.b_tilde},
                                   {"rmse", refit.rmse},
                                   {"eccentricity", refit.eccentricity}})
    fit_drift = std::max(fit_drift, std::abs(row[key].get<double>() - value) / std::max(1.0, std::abs(value)));
  expect(fit_drift <= 1e-12, "re-fit from CSV drifts by " + fmt(fit_drift));

  return std::to_string(repeated.size() + 1) + " commands byte-identical on rerun, exit codes 0-4 exercised, CSV "
         "round trip drift " + fmt(worst) + ", re-fit drift " + fmt(fit_drift);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"polynomial identities", polynomial_identities},
      {"Fibonacci lemma", lemma},
      {"ellipse containment", containment},
      {"Pell root counts", pell_counts},
      {"real root counts at F_{n+1}", real_counts},
      {"imaginary root uniqueness", imaginary_roots},
      {"fit RMSE trend", rmse_trend},
      {"semi-axes near sqrt 5 and 1", stabilization},
      {"boundary residual trend", boundary_trend},
      {"solver properties", solver_properties},
      {"fit properties", fit_properties},
      {"CLI contract", [&] { return cli_contract(exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict, detail;
    try {
      detail = criteria[i].second();
      verdict = "PASS";
    } catch (const std::exception& e) {
      detail = e.what();
      verdict = "FAIL";
      ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %-28s %s [%.1fs]\n", verdict.c_str(), i + 1, criteria[i].first.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
