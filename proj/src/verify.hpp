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

#ifndef PATHSPEC_VERIFY_HPP
#define PATHSPEC_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "fit.hpp"
#include "report.hpp"
#include "roots.hpp"

namespace pathspec::verify {

inline constexpr double kDefaultTolerance = 1e-9;

/// Roots of f_n(λ) = c against E(sqrt 5, 1), c defaulting to F_{n+1}.
/// Asserted only for n divisible by 4; other n produce exploratory reports.
Report containment_check(std::uint64_t n, double tol = kDefaultTolerance, const SolveConfig& cfg = {},
                         const std::optional<BigInt>& c = std::nullopt);

/// {1/2, -1/2, 2, -2, 3/2, -3/2}
std::vector<BigRational> default_imaginary_samples();

/// f_{4k}(±i) == F_{4k+1} exactly, and f_{4k}(a i) != F_{4k+1} for every
/// sample a (samples must exclude ±1).
Report imaginary_root_check(std::uint64_t k, std::span<const BigRational> samples);

/// sum_{j=0}^{2k} (a^2)^{2k-j} C(4k-j, j)
BigRational eq1_sum(std::uint64_t k, const BigRational& a);

/// The sum above compared with F_{4k+1} according to |a| vs 1.
Report eq1_monotonicity_check(std::uint64_t k, const BigRational& a);

/// c = F_{n+1}: two distinct real roots for even n, one negative root for odd n.
Report real_count_conjecture_check(std::uint64_t n);

/// Real-root count of f_n(λ) = c against the Pell-bound theorem. Instances
/// outside the theorem's hypotheses are reported but not asserted.
Report pell_bound_check(std::uint64_t n, const BigInt& c);

/// max_k |Re(ρ_k)^2/5 + Im(ρ_k)^2 - 1|
double boundary_residual(std::span<const Point> roots);
/// The same for the roots of f_n(λ) = F_{n+1}; n >= 3.
double boundary_residual(std::uint64_t n, const SolveConfig& cfg = {});

/// Everything the sweep and the conjecture suite need for one (n, c).
struct Analysis {
  std::uint64_t n = 0;
  BigInt c;
  RootSet roots;
  std::optional<fit::EllipseFit> fit;
  std::string fit_error;  // set when the fit was degenerate
  double boundary_residual = 0.0;
  double max_re = 0.0;  // max |Re|
  double max_im = 0.0;  // max |Im|
};

/// `c` defaults to F_{n+1}. Solver errors propagate; a degenerate fit is
/// recorded in `fit_error`.
Analysis analyze(std::uint64_t n, const std::optional<BigInt>& c, const SolveConfig& cfg = {});

/// One report per n in [1, n_max]: the ellipse fit and max |Re| are reported
/// only, max |Im| <= 1 is asserted for n divisible by 4, and the real-root
/// counts are asserted through the exact counter.
std::vector<Report> conjecture_suite(std::uint64_t n_max, double tol = kDefaultTolerance,
                                     const SolveConfig& cfg = {});
Report conjecture_check(std::uint64_t n, double tol = kDefaultTolerance, const SolveConfig& cfg = {});

/// Suites addressable by name: lemma, imaginary, realcount, containment,
/// eq1, pell, conjecture, cycle, all. `c` is accepted by containment only.
bool is_suite(std::string_view name);
std::vector<Report> run_suite(std::string_view name, std::uint64_t n_min, std::uint64_t n_max,
                              double tol = kDefaultTolerance, const SolveConfig& cfg = {},
                              const std::optional<BigInt>& c = std::nullopt);

/// One row of a degree sweep. `error` is empty on success.
struct SweepRow {
  std::uint64_t n = 0;
  std::string c;
  double a_tilde = 0.0, b_tilde = 0.0, rmse = 0.0, eccentricity = 0.0;
  double boundary_residual = 0.0, max_re = 0.0, max_im = 0.0;
  unsigned precision_bits = 0;
  bool solved = false;  // roots available; fit columns may still be missing
  std::optional<ErrorKind> error;
};

/// Rows for n = n_min, n_min + step, ..., in ascending n regardless of how
/// the per-n work was scheduled.
std::vector<SweepRow> sweep(std::uint64_t n_min, std::uint64_t n_max, std::uint64_t step,
                            const std::optional<BigInt>& c, const SolveConfig& cfg = {});

}  // namespace pathspec::verify

#endif  // PATHSPEC_VERIFY_HPP
