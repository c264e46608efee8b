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

#ifndef PATHSPEC_ROOTS_HPP
#define PATHSPEC_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "mpreal.hpp"
#include "point.hpp"
#include "poly.hpp"

namespace pathspec {

/// f_n(λ) - c for the path graph on n vertices.
struct ShiftedProblem {
  std::uint64_t n = 0;
  BigInt c;
  IntPolynomial shifted;

  static ShiftedProblem make(std::uint64_t n, const BigInt& c);
  /// The primary instance c = F_{n+1}.
  static ShiftedProblem fibonacci(std::uint64_t n);
};

struct SolveConfig {
  double tolerance = 1e-12;   // relative residual and inter-precision root drift
  unsigned start_bits = 128;
  unsigned max_bits = 16384;
  unsigned max_iterations = 2000;  // Aberth sweeps per precision level
};

struct ComplexRoot {
  MpComplex z;
  double residual = 0.0;        // |p(z)| / max_k |c_k| max(1,|z|)^k
  double error_estimate = 0.0;  // drift from the previous precision level
  bool coincident = false;      // within error of another root

  Point point() const { return {z.re.to_double(), z.im.to_double()}; }
};

/// All n roots of a shifted problem, sorted by (re, im) ascending.
struct RootSet {
  std::vector<ComplexRoot> roots;
  double residual_bound = 0.0;
  unsigned precision_bits = 0;

  std::size_t size() const { return roots.size(); }
  std::vector<Point> points() const;
  bool has_coincident() const;
};

/// Adaptive-precision Aberth–Ehrlich solve. Precision starts at
/// cfg.start_bits and doubles until two consecutive levels agree to
/// cfg.tolerance and every relative residual is within cfg.tolerance.
/// Throws DegreeZero or PrecisionExhausted.
RootSet solve(const ShiftedProblem& problem, const SolveConfig& cfg = {});

/// Same, for any integer polynomial of degree >= 1.
RootSet solve_polynomial(const IntPolynomial& p, const SolveConfig& cfg = {});

struct RealRootCount {
  std::uint64_t count = 0;           // distinct real roots
  std::uint64_t negative_count = 0;  // distinct negative roots
};

/// Sturm-chain count over the integers; no floating point involved.
RealRootCount count_real_roots(const IntPolynomial& p);
RealRootCount real_root_count_exact(const ShiftedProblem& problem);

/// 2cos(sπ/(n+1)) for s = 1..n, ascending, at `bits` of precision.
std::vector<MpReal> path_zero_roots(std::uint64_t n, unsigned bits = 128);

}  // namespace pathspec

#endif  // PATHSPEC_ROOTS_HPP
