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

#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "error.hpp"

namespace pathspec::verify {

namespace {

nlohmann::json point_json(const Point& p) { return nlohmann::json::array({p.re, p.im}); }

std::string rational_text(const BigRational& q) { return q.get_str(10); }

}  // namespace

Report containment_check(std::uint64_t n, double tol, const SolveConfig& cfg, const std::optional<BigInt>& c) {
  require(n >= 1, "path graph order must be at least 1");
  const BigInt constant = c ? *c : seq::fibonacci(n + 1);
  Report report("containment", {{"n", n}, {"c", to_decimal(constant)}});
  report.tolerance = tol;
  report.asserted = n % 4 == 0;

  const RootSet roots = solve(ShiftedProblem::make(n, constant), cfg);
  const fit::EllipseSpec ref = fit::reference_ellipse();
  double max_form = 0.0, max_re = 0.0, max_im = 0.0;
  Point worst;
  for (const Point& p : roots.points()) {
    const double form = ref.form(p);
    if (form > max_form) {
      max_form = form;
      worst = p;
    }
    max_re = std::max(max_re, std::abs(p.re));
    max_im = std::max(max_im, std::abs(p.im));
  }
  report.witnesses["max_ellipse_form"] = max_form;
  report.witnesses["worst_root"] = point_json(worst);
  report.witnesses["max_abs_re"] = max_re;
  report.witnesses["max_abs_im"] = max_im;
  report.witnesses["re_bound"] = ref.lambda_axis;
  report.witnesses["im_bound"] = ref.kappa_axis;
  report.witnesses["precision_bits"] = roots.precision_bits;
  if (!report.asserted) report.witnesses["note"] = "exploratory: n is not divisible by 4";
  return report.finish(max_form <= 1.0 + tol && max_im <= ref.kappa_axis + tol && max_re <= ref.lambda_axis + tol);
}

std::vector<BigRational> default_imaginary_samples() {
  return {BigRational(1, 2), BigRational(-1, 2), BigRational(2), BigRational(-2), BigRational(3, 2),
          BigRational(-3, 2)};
}

Report imaginary_root_check(std::uint64_t k, std::span<const BigRational> samples) {
  require(k >= 1, "k must be at least 1");
  Report report("imaginary_root", {{"k", k}, {"n", 4 * k}});
  const IntPolynomial f = poly::path_charpoly(4 * k);
  const GaussianRational target = GaussianRational::real(seq::fibonacci(4 * k + 1));

  const GaussianRational at_i = poly::eval_exact(f, GaussianRational::imag(1));
  const GaussianRational at_minus_i = poly::eval_exact(f, GaussianRational::imag(-1));
  bool ok = at_i == target && at_minus_i == target;
  report.witnesses["f_at_i"] = at_i.to_string();
  report.witnesses["f_at_minus_i"] = at_minus_i.to_string();
  report.witnesses["fibonacci"] = to_decimal(seq::fibonacci(4 * k + 1));

  nlohmann::json evaluated = nlohmann::json::array();
  for (const BigRational& a : samples) {
    require(abs(a) != 1, "samples must exclude 1 and -1");
    const GaussianRational value = poly::eval_exact(f, GaussianRational::imag(a));
    const bool differs = !(value == target);
    evaluated.push_back({{"a", rational_text(a)}, {"value", value.to_string()}, {"differs", differs}});
    ok = ok && differs;
  }
  report.witnesses["samples"] = evaluated;
  return report.finish(ok);
}

BigRational eq1_sum(std::uint64_t k, const BigRational& a) {
  const BigRational a2 = a * a;
  BigRational sum = 0;
  BigRational power = 1;  // (a^2)^(2k - j), walked from j = 2k down to 0
  for (std::uint64_t j = 2 * k + 1; j-- > 0;) {
    sum += power * BigRational(seq::binomial(4 * k - j, j));
    power *= a2;
  }
  return sum;
}

Report eq1_monotonicity_check(std::uint64_t k, const BigRational& a) {
  require(k >= 1, "k must be at least 1");
  Report report("eq1_monotonicity", {{"k", k}, {"a", rational_text(a)}});
  const BigRational g = eq1_sum(k, a);
  const BigRational fib(seq::fibonacci(4 * k + 1));
  const int side = cmp(abs(a), BigRational(1));
  const int got = cmp(g, fib);
  report.witnesses["sum"] = rational_text(g);
  report.witnesses["fibonacci"] = rational_text(fib);
  report.witnesses["expected_relation"] = side < 0 ? "<" : side == 0 ? "=" : ">";
  report.witnesses["observed_relation"] = got < 0 ? "<" : got == 0 ? "=" : ">";
  return report.finish((side < 0 && got < 0) || (side == 0 && got == 0) || (side > 0 && got > 0));
}

Report real_count_conjecture_check(std::uint64_t n) {
  require(n >= 1, "path graph order must be at least 1");
  const BigInt c = seq::fibonacci(n + 1);
  Report report("real_count_conjecture", {{"n", n}, {"c", to_decimal(c)}});
  const RealRootCount count = real_root_count_exact(ShiftedProblem::make(n, c));
  report.witnesses["real_roots"] = count.count;
  report.witnesses["negative_roots"] = count.negative_count;
  const bool ok = n % 2 == 0 ? count.count == 2 : (count.count == 1 && count.negative_count == 1);
  report.witnesses["expected"] = n % 2 == 0 ? "2 distinct real roots" : "1 real root, negative";
  return report.finish(ok);
}

Report pell_bound_check(std::uint64_t n, const BigInt& c) {
  require(n >= 1, "path graph order must be at least 1");
  const BigInt pell = seq::pell(n + 1);
  Report report("pell_bound", {{"n", n}, {"c", to_decimal(c)}, {"pell", to_decimal(pell)}});
  const RealRootCount count = real_root_count_exact(ShiftedProblem::make(n, c));
  report.witnesses["real_roots"] = count.count;

  std::optional<std::uint64_t> expected;
  if (n % 2 == 1 && abs(c) >= pell) expected = 1;
  if (n % 2 == 0 && c <= -pell) expected = 0;
  if (n % 2 == 0 && c >= pell) expected = 2;
  if (!expected) {
    report.asserted = false;
    report.witnesses["note"] = "outside the theorem's hypotheses";
    return report.finish(true);
  }
  report.witnesses["expected_real_roots"] = *expected;
  return report.finish(count.count == *expected);
}

double boundary_residual(std::span<const Point> roots) {
  const fit::EllipseSpec ref = fit::reference_ellipse();
  double worst = 0.0;
  for (const Point& p : roots) worst = std::max(worst, std::abs(ref.form(p) - 1.0));
  return worst;
}

double boundary_residual(std::uint64_t n, const SolveConfig& cfg) {
  require(n >= 3, "boundary residual needs n >= 3");
  return boundary_residual(solve(ShiftedProblem::fibonacci(n), cfg).points());
}

Analysis analyze(std::uint64_t n, const std::optional<BigInt>& c, const SolveConfig& cfg) {
  Analysis out;
  out.n = n;
  out.c = c ? *c : seq::fibonacci(n + 1);
  out.roots = solve(ShiftedProblem::make(n, out.c), cfg);
  const std::vector<Point> pts = out.roots.points();
  try {
    out.fit = fit::fit_ellipse(pts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateGeometry) throw;
    out.fit_error = kind_name(e.kind());
  }
  out.boundary_residual = boundary_residual(pts);
  for (const Point& p : pts) {
    out.max_re = std::max(out.max_re, std::abs(p.re));
    out.max_im = std::max(out.max_im, std::abs(p.im));
  }
  return out;
}

Report conjecture_check(std::uint64_t n, double tol, const SolveConfig& cfg) {
  const Analysis a = analyze(n, std::nullopt, cfg);
  Report report("conjecture", {{"n", n}, {"c", to_decimal(a.c)}});
  report.tolerance = tol;

  nlohmann::json ellipse;
  if (a.fit) {
    ellipse = {{"a_tilde", a.fit->a_tilde}, {"b_tilde", a.fit->b_tilde}, {"rmse", a.fit->rmse},
               {"eccentricity", a.fit->eccentricity}};
  } else {
    ellipse = {{"fit_error", a.fit_error}};
  }
  report.witnesses["ellipse_fit"] = ellipse;
  report.witnesses["max_abs_re"] = a.max_re;

  const bool im_asserted = n % 4 == 0;
  const bool im_ok = a.max_im <= 1.0 + tol;
  report.witnesses["max_abs_im"] = a.max_im;
  report.witnesses["imaginary_bound_asserted"] = im_asserted;

  const Report counts = real_count_conjecture_check(n);
  report.witnesses["real_roots"] = counts.witnesses["real_roots"];
  report.witnesses["negative_roots"] = counts.witnesses["negative_roots"];
  report.witnesses["real_count_passed"] = counts.passed;
  return report.finish(counts.passed && (!im_asserted || im_ok));
}

std::vector<Report> conjecture_suite(std::uint64_t n_max, double tol, const SolveConfig& cfg) {
  require(n_max >= 1, "n_max must be at least 1");
  std::vector<Report> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(conjecture_check(n, tol, cfg));
  return out;
}

namespace {

constexpr std::string_view kSuites[] = {"lemma", "imaginary", "realcount", "containment", "eq1",
                                        "pell",  "conjecture", "cycle"};

std::vector<BigRational> eq1_samples() {
  return {BigRational(0),     BigRational(1, 2), BigRational(-1, 2), BigRational(1),  BigRational(-1),
          BigRational(3, 2), BigRational(-3, 2), BigRational(2),     BigRational(-2)};
}

}  // namespace

bool is_suite(std::string_view name) {
  return name == "all" || std::find(std::begin(kSuites), std::end(kSuites), name) != std::end(kSuites);
}

std::vector<Report> run_suite(std::string_view name, std::uint64_t n_min, std::uint64_t n_max, double tol,
                              const SolveConfig& cfg, const std::optional<BigInt>& c) {
  require(is_suite(name), "unknown suite: " + std::string(name));
  require(n_min >= 1 && n_min <= n_max, "need 1 <= n_min <= n_max");
  require(!c || name == "containment", "an explicit constant applies only to the containment suite");
  std::vector<Report> out;
  if (name == "all") {
    for (std::string_view s : kSuites) {
      auto part = run_suite(s, n_min, n_max, tol, cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  const std::uint64_t first4 = (n_min + 3) / 4 * 4;
  if (name == "lemma") {
    for (auto n = n_min; n <= n_max; ++n) out.push_back(poly::lemma_fib_check(n));
  } else if (name == "realcount") {
    for (auto n = n_min; n <= n_max; ++n) out.push_back(real_count_conjecture_check(n));
  } else if (name == "containment") {
    for (auto n = first4; n <= n_max; n += 4) out.push_back(containment_check(n, tol, cfg, c));
  } else if (name == "imaginary") {
    const auto samples = default_imaginary_samples();
    for (auto n = first4; n <= n_max; n += 4) out.push_back(imaginary_root_check(n / 4, samples));
  } else if (name == "eq1") {
    for (auto n = first4; n <= n_max; n += 4)
      for (const auto& a : eq1_samples()) out.push_back(eq1_monotonicity_check(n / 4, a));
  } else if (name == "pell") {
    for (auto n = n_min; n <= n_max; ++n) {
      const BigInt p = seq::pell(n + 1);
      for (const BigInt& c : {BigInt(p), BigInt(-p), BigInt(p + 1), BigInt(-p - 1), BigInt(2 * p), BigInt(-2 * p)})
        out.push_back(pell_bound_check(n, c));
    }
  } else if (name == "conjecture") {
    for (auto n = n_min; n <= n_max; ++n) out.push_back(conjecture_check(n, tol, cfg));
  } else if (name == "cycle") {
    for (auto n = std::max<std::uint64_t>(n_min, 3); n <= n_max; ++n) out.push_back(poly::cycle_recursion_check(n));
  }
  return out;
}

std::vector<SweepRow> sweep(std::uint64_t n_min, std::uint64_t n_max, std::uint64_t step,
                            const std::optional<BigInt>& c, const SolveConfig& cfg) {
  require(n_min >= 1 && n_min <= n_max, "need 1 <= n_min <= n_max");
  require(step >= 1, "step must be at least 1");
  std::vector<std::uint64_t> orders;
  for (auto n = n_min; n <= n_max; n += step) orders.push_back(n);
  std::vector<SweepRow> rows(orders.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < orders.size(); i = next++) {
      SweepRow& row = rows[i];
      row.n = orders[i];
      row.c = to_decimal(c ? *c : seq::fibonacci(row.n + 1));
      try {
        const Analysis a = analyze(row.n, c, cfg);
        row.solved = true;
        row.precision_bits = a.roots.precision_bits;
        row.boundary_residual = a.boundary_residual;
        row.max_re = a.max_re;
        row.max_im = a.max_im;
        if (a.fit) {
          row.a_tilde = a.fit->a_tilde;
          row.b_tilde = a.fit->b_tilde;
          row.rmse = a.fit->rmse;
          row.eccentricity = a.fit->eccentricity;
        } else {
          row.error = ErrorKind::DegenerateGeometry;
        }
      } catch (const Error& e) {
        row.error = e.kind();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(orders.size())));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 1; w < workers; ++w) jobs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& j : jobs) j.get();
  return rows;
}

}  // namespace pathspec::verify
