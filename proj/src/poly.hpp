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

#ifndef PATHSPEC_POLY_HPP
#define PATHSPEC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "report.hpp"
#include "seq.hpp"

namespace pathspec {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. Trailing zero coefficients are always trimmed,
/// so the zero polynomial has an empty coefficient vector and degree 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& s) { return lhs *= s; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// x * p(x)
  IntPolynomial times_x() const;
  /// p(-x)
  IntPolynomial reflected() const;
  IntPolynomial derivative() const;
  /// p(x) - c
  IntPolynomial minus_constant(const BigInt& c) const;

  /// "c0 c1 ... cn" in decimal, single spaces; the zero polynomial is "0".
  std::string serialize() const;
  static IntPolynomial parse(std::string_view text);
  /// Human-readable form, highest degree first, e.g. "-λ^3 + 3λ + 2".
  std::string pretty(std::string_view var = "λ") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact complex number with rational parts. mpq_class keeps both parts in
/// lowest terms with positive denominators.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational real(const BigRational& r) { return {r, 0}; }
  static GaussianRational imag(const BigRational& i) { return {0, i}; }
  /// i^e
  static GaussianRational i_power(std::uint64_t e);

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const;
};

/// Adjacency matrices as dense 0/1 rows.
using Adjacency = std::vector<std::vector<int>>;

Adjacency path_adjacency(std::size_t n);
Adjacency cycle_adjacency(std::size_t n);

/// det(A - λI) for an integer matrix A. Evaluates the determinant exactly at
/// n + 1 integer points by sparse rational elimination and interpolates; the
/// result is checked to have integer coefficients.
IntPolynomial charpoly_from_adjacency(const Adjacency& adjacency);

namespace poly {

/// f_n from the closed binomial formula.
IntPolynomial path_charpoly(std::uint64_t n);
/// f_n from f_n = -λ f_{n-1} - f_{n-2}, seeded with f_1 = -λ, f_2 = λ² - 1.
IntPolynomial path_charpoly_recursive(std::uint64_t n);
/// det(A(C_n) - λI) from the cycle adjacency matrix, n >= 3.
IntPolynomial cycle_charpoly(std::uint64_t n);

IntPolynomial chebyshev_u(std::uint64_t n);
IntPolynomial chebyshev_t(std::uint64_t n);

/// U_n(-x/2) computed over the rationals. Throws NonIntegral if any
/// coefficient fails to be an integer.
IntPolynomial compose_u_neg_half(std::uint64_t n);

GaussianRational eval_exact(const IntPolynomial& p, const GaussianRational& z);

/// U_n(z) by the three-term recurrence, without expanding coefficients.
GaussianRational chebyshev_u_at(std::uint64_t n, const GaussianRational& z);

/// U_n(-i/2) == i^{3n} F_{n+1}, evaluated by recurrence.
Report lemma_fib_check(std::uint64_t n);

/// Checks (-1)^n det(C_n - λI) == p_n - p_{n-2} - 2 with p_m = (-1)^m f_m,
/// and records whether the same identity holds literally in the
/// det(A - λI) convention.
Report cycle_recursion_check(std::uint64_t n);

}  // namespace poly
}  // namespace pathspec

#endif  // PATHSPEC_POLY_HPP
