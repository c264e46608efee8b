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

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"
#include "poly.hpp"
#include "root_checks.hpp"
#include "roots.hpp"
#include "seq.hpp"

using namespace pathspec;

void check_rootset_invariants(const ShiftedProblem& problem, const RootSet& set) {
  REQUIRE(root_checks::rootset_violation(problem, set) == "");
}

namespace {

std::size_t numerically_real(const RootSet& set) {
  std::size_t k = 0;
  for (const Point& p : set.points())
    if (std::abs(p.im) < 1e-9) ++k;
  return k;
}

}  // namespace

TEST_CASE("shifted problem construction") {
  const ShiftedProblem p = ShiftedProblem::fibonacci(4);
  CHECK(p.c == 5);
  CHECK(p.shifted == poly::path_charpoly(4).minus_constant(5));
  CHECK(p.shifted.degree() == 4);
  CHECK(ShiftedProblem::make(3, 12).shifted.coeff(0) == -12);
}

TEST_CASE("linear and quadratic roots") {
  const RootSet one = solve(ShiftedProblem::make(1, 1));
  REQUIRE(one.size() == 1);
  CHECK(one.roots[0].point().re == -1.0);
  CHECK(one.roots[0].point().im == 0.0);

  const RootSet two = solve(ShiftedProblem::make(2, 2));
  REQUIRE(two.size() == 2);
  CHECK(two.roots[0].point().re == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.roots[1].point().re == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.roots[0].point().im == 0.0);
}

TEST_CASE("f_4 = 0 gives the path spectrum") {
  const RootSet set = solve(ShiftedProblem::make(4, 0));
  const std::vector<double> expected = {-2 * std::cos(std::numbers::pi / 5), -2 * std::cos(2 * std::numbers::pi / 5),
                                        2 * std::cos(2 * std::numbers::pi / 5), 2 * std::cos(std::numbers::pi / 5)};
  REQUIRE(set.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(set.roots[i].point().re == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(set.roots[i].point().im == 0.0);
  }
  CHECK(expected[3] == doctest::Approx(1.6180340).epsilon(1e-7));
}

TEST_CASE("f_4 = F_5 has ±i and ±2 exactly") {
  const RootSet set = solve(ShiftedProblem::fibonacci(4));
  const std::vector<Point> pts = set.points();
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].re == -2.0);
  CHECK(pts[1].re == 0.0);
  CHECK(pts[1].im == -1.0);
  CHECK(pts[2].im == 1.0);
  CHECK(pts[3].re == 2.0);
}

TEST_CASE("zero-constant solves match 2cos(sπ/(n+1))") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const RootSet set = solve(ShiftedProblem::make(n, 0));
    const auto expected = oracle::path_spectrum(n);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(std::abs(set.roots[i].point().re - expected[i]) <= 1e-10);
      REQUIRE(std::abs(set.roots[i].point().im) <= 1e-10);
    }
  }
}

TEST_CASE("path_zero_roots") {
  auto doubles = [](std::uint64_t n) {
    std::vector<double> out;
    for (const MpReal& r : path_zero_roots(n)) out.push_back(r.to_double());
    return out;
  };
  CHECK(doubles(1) == std::vector<double>{0.0});
  const auto two = doubles(2);
  CHECK(two[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(two[1] == doctest::Approx(1.0).epsilon(1e-15));
  const auto three = doubles(3);
  CHECK(three[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(three[1] == 0.0);
  CHECK(three[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto got = doubles(n);
    const auto expected = oracle::path_spectrum(n);
    REQUIRE(got.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(std::abs(got[i] - expected[i]) <= 1e-13);
      REQUIRE(got[i] == -got[n - 1 - i]);
    }
  }
}

TEST_CASE("root set invariants over assorted constants") {
  oracle::Gen gen(0x5eed0101);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const BigInt F = seq::fibonacci(n + 1), Pn = seq::pell(n + 1);
    for (const BigInt& c : {BigInt(0), F, BigInt(-F), Pn, BigInt(-Pn), BigInt(gen.integer(-1000, 1000))}) {
      CAPTURE(n);
      CAPTURE(c.get_str());
      const ShiftedProblem problem = ShiftedProblem::make(n, c);
      check_rootset_invariants(problem, solve(problem));
    }
  }
}

TEST_CASE("root set invariants at larger degrees") {
  for (std::uint64_t n : {64u, 101u, 150u}) {
    CAPTURE(n);
    const ShiftedProblem problem = ShiftedProblem::fibonacci(n);
    check_rootset_invariants(problem, solve(problem));
  }
}

TEST_CASE("numerically real roots agree with the exact count") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const BigInt F = seq::fibonacci(n + 1), Pn = seq::pell(n + 1);
    for (const BigInt& c : {BigInt(0), F, BigInt(-F), Pn, BigInt(-Pn)}) {
      CAPTURE(n);
      CAPTURE(c.get_str());
      const ShiftedProblem problem = ShiftedProblem::make(n, c);
      REQUIRE(numerically_real(solve(problem)) == real_root_count_exact(problem).count);
    }
  }
}

TEST_CASE("exact real root counts") {
  CHECK(real_root_count_exact(ShiftedProblem::make(2, 5)).count == 2);
  CHECK(real_root_count_exact(ShiftedProblem::make(2, -5)).count == 0);
  CHECK(real_root_count_exact(ShiftedProblem::make(3, 12)).count == 1);
  const RealRootCount odd = real_root_count_exact(ShiftedProblem::fibonacci(3));
  CHECK(odd.count == 1);
  CHECK(odd.negative_count == 1);
}

TEST_CASE("Sturm counts on polynomials with known factors") {
  oracle::Gen gen(0x5eed0102);
  for (int trial = 0; trial < 150; ++trial) {
    IntPolynomial p = IntPolynomial::constant(gen.integer(1, 5) * (gen.integer(0, 1) ? 1 : -1));
    std::vector<long> real_roots;
    const long linear = gen.integer(0, 6);
    while (static_cast<long>(real_roots.size()) < linear) {
      const long r = gen.integer(-20, 20);
      if (std::find(real_roots.begin(), real_roots.end(), r) == real_roots.end()) real_roots.push_back(r);
    }
    std::size_t negative = 0;
    for (long r : real_roots) {
      const long mult = gen.integer(0, 4) == 0 ? 2 : 1;
      for (long m = 0; m < mult; ++m) p = p * IntPolynomial({BigInt(-r), BigInt(1)});
      if (r < 0) ++negative;
    }
    for (long q = gen.integer(0, 3); q > 0; --q) p = p * IntPolynomial({BigInt(gen.integer(1, 50)), 0, 1});
    if (p.degree() == 0) continue;
    CAPTURE(p.serialize());
    const RealRootCount got = count_real_roots(p);
    REQUIRE(got.count == real_roots.size());
    REQUIRE(got.negative_count == negative);
  }
}

TEST_CASE("repeated roots are flagged, not rejected") {
  const RootSet set = solve(ShiftedProblem::make(2, -1));
  REQUIRE(set.size() == 2);
  CHECK(set.has_coincident());
  for (const ComplexRoot& r : set.roots) {
    CHECK(r.coincident);
    CHECK(r.point().re == 0.0);
    CHECK(r.point().im == 0.0);
  }
  CHECK_FALSE(solve(ShiftedProblem::make(4, 0)).has_coincident());
}

TEST_CASE("solver errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { solve_polynomial(IntPolynomial::constant(3)); }) == ErrorKind::DegreeZero);
  CHECK(kind_of([] { ShiftedProblem::make(0, 5); }) == ErrorKind::InvalidArgument);
  SolveConfig tight;
  tight.start_bits = 64;
  tight.max_bits = 64;
  CHECK(kind_of([&] { solve(ShiftedProblem::fibonacci(5), tight); }) == ErrorKind::PrecisionExhausted);
  SolveConfig bad;
  bad.start_bits = 32;
  CHECK(kind_of([&] { solve(ShiftedProblem::fibonacci(5), bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("solving is deterministic") {
  const RootSet a = solve(ShiftedProblem::fibonacci(37));
  const RootSet b = solve(ShiftedProblem::fibonacci(37));
  REQUIRE(a.size() == b.size());
  CHECK(a.precision_bits == b.precision_bits);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(compare(a.roots[i].z.re, b.roots[i].z.re) == 0);
    CHECK(compare(a.roots[i].z.im, b.roots[i].z.im) == 0);
  }
}
