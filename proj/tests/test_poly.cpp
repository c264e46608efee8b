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

#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"
#include "poly.hpp"
#include "seq.hpp"

using namespace pathspec;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

IntPolynomial from_oracle(const std::vector<mpz_class>& c) { return IntPolynomial(c); }

GaussianRational G(BigRational re, BigRational im) { return {re, im}; }

}  // namespace

TEST_CASE("path polynomial small cases") {
  CHECK(poly::path_charpoly(1) == P({0, -1}));
  CHECK(poly::path_charpoly(2) == P({-1, 0, 1}));
  CHECK(poly::path_charpoly(4) == P({1, 0, -3, 0, 1}));
  CHECK(poly::path_charpoly(4) == from_oracle(oracle::charpoly(oracle::path_matrix(4))));
  CHECK(poly::path_charpoly_recursive(1) == P({0, -1}));
  CHECK(poly::path_charpoly_recursive(3) == P({0, 2, 0, -1}));
  CHECK(poly::path_charpoly_recursive(5) == P({0, -3, 0, 4, 0, -1}));
}

TEST_CASE("path polynomial agrees with the determinant oracle") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const IntPolynomial expected = from_oracle(oracle::charpoly(oracle::path_matrix(n)));
    CHECK(poly::path_charpoly(n) == expected);
    CHECK(charpoly_from_adjacency(path_adjacency(n)) == expected);
  }
}

TEST_CASE("closed form, recurrence and Chebyshev substitution coincide") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const IntPolynomial f = poly::path_charpoly(n);
    REQUIRE(f == poly::path_charpoly_recursive(n));
    REQUIRE(f == poly::compose_u_neg_half(n));
  }
}

TEST_CASE("path polynomial parity, leading coefficient and reflection") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const IntPolynomial f = poly::path_charpoly(n);
    REQUIRE(f.degree() == n);
    REQUIRE(f.leading() == (n % 2 == 0 ? 1 : -1));
    for (std::size_t m = 0; m <= n; ++m)
      if ((m + n) % 2 == 1) REQUIRE(f.coeff(m) == 0);
    REQUIRE(f.reflected() == (n % 2 == 0 ? f : -f));
  }
}

TEST_CASE("evaluation at 2 agrees with integer Horner and the closed value") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const IntPolynomial f = poly::path_charpoly(n);
    const GaussianRational v = poly::eval_exact(f, GaussianRational::real(2));
    REQUIRE(v.im == 0);
    REQUIRE(v.re == BigRational(oracle::horner(f.coeffs(), 2)));
    REQUIRE(v.re == BigRational(oracle::path_at_two(n)));
  }
}

TEST_CASE("cycle polynomial small cases") {
  CHECK(poly::cycle_charpoly(3) == P({2, 3, 0, -1}));
  CHECK(poly::cycle_charpoly(4) == P({0, 0, -4, 0, 1}));
  // det(A) = 2 * (φ⁻¹ * -φ)^2 = 2, so the constant term is +2
  CHECK(poly::cycle_charpoly(5) == P({2, -5, 0, 5, 0, -1}));
  for (std::size_t n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(poly::cycle_charpoly(n) == from_oracle(oracle::charpoly(oracle::cycle_matrix(n))));
  }
  CHECK_THROWS_AS(poly::cycle_charpoly(2), Error);
}

TEST_CASE("determinant route matches the oracle on random graphs") {
  oracle::Gen gen(0x5eed0001);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    Adjacency a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = a[j][i] = static_cast<int>(gen.integer(0, 1));
    CAPTURE(trial);
    REQUIRE(charpoly_from_adjacency(a) == from_oracle(oracle::charpoly(a)));
  }
}

TEST_CASE("cycle recursion holds in the monic convention only") {
  const Report r3 = poly::cycle_recursion_check(3);
  CHECK(r3.passed);
  CHECK(r3.witnesses["literal_form_holds"] == false);
  CHECK(r3.witnesses["determinant"] == "2 3 0 -1");
  for (std::uint64_t n = 3; n <= 200; ++n) REQUIRE(poly::cycle_recursion_check(n).passed);
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(poly::chebyshev_u(0) == P({1}));
  CHECK(poly::chebyshev_u(1) == P({0, 2}));
  CHECK(poly::chebyshev_u(3) == P({0, -4, 0, 8}));
  CHECK(poly::chebyshev_t(0) == P({1}));
  CHECK(poly::chebyshev_t(1) == P({0, 1}));
  CHECK(poly::chebyshev_t(2) == P({-1, 0, 2}));
  // T_n = U_n - x U_{n-1}
  for (std::uint64_t n = 1; n <= 100; ++n)
    REQUIRE(poly::chebyshev_t(n) == poly::chebyshev_u(n) - poly::chebyshev_u(n - 1).times_x());
}

TEST_CASE("Chebyshev substitution") {
  CHECK(poly::compose_u_neg_half(1) == P({0, -1}));
  CHECK(poly::compose_u_neg_half(2) == P({-1, 0, 1}));
  CHECK(poly::compose_u_neg_half(4) == P({1, 0, -3, 0, 1}));
}

TEST_CASE("exact evaluation") {
  CHECK(poly::eval_exact(P({-1, 0, 1}), GaussianRational::real(1)) == GaussianRational::real(0));
  CHECK(poly::eval_exact(P({0, -1}), G(0, BigRational(-1, 2))) == G(0, BigRational(1, 2)));
  CHECK(poly::eval_exact(P({1, 0, -3, 0, 1}), GaussianRational::imag(1)) == GaussianRational::real(5));
}

TEST_CASE("recurrence evaluation matches coefficient evaluation") {
  oracle::Gen gen(0x5eed0002);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::uint64_t>(gen.integer(0, 60));
    const GaussianRational z = G(gen.rational(9, 7), gen.rational(9, 7));
    CAPTURE(n);
    REQUIRE(poly::chebyshev_u_at(n, z) == poly::eval_exact(poly::chebyshev_u(n), z));
  }
}

TEST_CASE("Gaussian rationals stay canonical") {
  oracle::Gen gen(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianRational a = G(gen.rational(50, 30), gen.rational(50, 30));
    const GaussianRational b = G(gen.rational(50, 30), gen.rational(50, 30));
    for (const GaussianRational& v : {a + b, a - b, a * b}) {
      for (const BigRational& part : {v.re, v.im}) {
        REQUIRE(part.get_den() > 0);
        REQUIRE(gcd(part.get_num(), part.get_den()) == 1);
      }
    }
  }
  CHECK(GaussianRational::i_power(0) == GaussianRational::real(1));
  CHECK(GaussianRational::i_power(3) == GaussianRational::imag(-1));
  CHECK(GaussianRational::i_power(18) == GaussianRational::real(-1));
}

TEST_CASE("lemma: U_n(-i/2) = i^{3n} F_{n+1}") {
  CHECK(poly::lemma_fib_check(1).passed);
  const Report r4 = poly::lemma_fib_check(4);
  CHECK(r4.passed);
  CHECK(r4.witnesses["value"] == "5 + 0i");
  const Report r6 = poly::lemma_fib_check(6);
  CHECK(r6.passed);
  CHECK(r6.witnesses["value"] == "-13 + 0i");
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(poly::lemma_fib_check(n).passed);
}

TEST_CASE("serialization") {
  CHECK(poly::path_charpoly(2).serialize() == "-1 0 1");
  CHECK(poly::path_charpoly(1).serialize() == "0 -1");
  CHECK(poly::cycle_charpoly(3).serialize() == "2 3 0 -1");
  CHECK(IntPolynomial().serialize() == "0");
  CHECK(poly::path_charpoly(2).pretty() == "λ^2 - 1");
  CHECK(poly::path_charpoly(1).pretty() == "-λ");
  CHECK(poly::cycle_charpoly(3).pretty() == "-λ^3 + 3λ + 2");
  CHECK(poly::chebyshev_u(3).pretty("x") == "8x^3 - 4x");
  CHECK(IntPolynomial().pretty() == "0");
}

TEST_CASE("serialization round-trips") {
  oracle::Gen gen(0x5eed0004);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(static_cast<std::size_t>(gen.integer(1, 12)));
    for (auto& x : c) x = gen.integer(0, 3) == 0 ? BigInt(0) : gen.big(static_cast<int>(gen.integer(1, 30)));
    const IntPolynomial p(c);
    REQUIRE(IntPolynomial::parse(p.serialize()) == p);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(IntPolynomial::parse(""), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("1 x 2"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("1.5"), Error);
  CHECK(IntPolynomial::parse("  3 0  ") == P({3}));
}

TEST_CASE("Chebyshev substitution rejects nothing for path orders") {
  for (std::uint64_t n = 1; n <= 50; ++n) CHECK_NOTHROW(poly::compose_u_neg_half(n));
}

TEST_CASE("parse accepts the typographic minus") {
  CHECK(IntPolynomial::parse("−1 0 1") == P({-1, 0, 1}));
}
