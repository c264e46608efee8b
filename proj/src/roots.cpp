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

#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "error.hpp"

namespace pathspec {

ShiftedProblem ShiftedProblem::make(std::uint64_t n, const BigInt& c) {
  require(n >= 1, "path graph order must be at least 1");
  ShiftedProblem p;
  p.n = n;
  p.c = c;
  p.shifted = poly::path_charpoly(n).minus_constant(c);
  return p;
}

ShiftedProblem ShiftedProblem::fibonacci(std::uint64_t n) { return make(n, seq::fibonacci(n + 1)); }

std::vector<Point> RootSet::points() const {
  std::vector<Point> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.point());
  return out;
}

bool RootSet::has_coincident() const {
  return std::any_of(roots.begin(), roots.end(), [](const ComplexRoot& r) { return r.coincident; });
}

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
constexpr double kStartAngle = 0.3;
constexpr double kCircleOffset = 0.7;

// Aberth–Ehrlich iteration for a fixed polynomial at a fixed precision.
// Roots whose residual reaches the rounding level of Horner's rule are
// frozen; the sweep ends when every root is frozen.
class AberthSolver {
 public:
  AberthSolver(const IntPolynomial& p, mpfr_prec_t bits)
      : bits_(bits), n_(p.degree()), p_(bits), dp_(bits), q_(bits), s_(bits), w_(bits),
        absz_(bits), scale_(bits), gamma_(bits), t1_(bits), t2_(bits), t3_(bits) {
    for (const auto& c : p.coeffs()) {
      coeffs_.emplace_back(c, bits);
      abs_coeffs_.emplace_back(BigInt(abs(c)), bits);
    }
    // Horner's rounding error in complex arithmetic stays below
    // 8 (n + 1) u sum |c_k| |z|^k.
    mpfr_set_ui(gamma_.get(), 8 * (n_ + 1), kRnd);
    mpfr_mul_2si(gamma_.get(), gamma_.get(), -static_cast<long>(bits), kRnd);
  }

  bool run(std::vector<MpComplex>& z, unsigned max_iterations) {
    std::vector<char> frozen(z.size(), 0);
    for (unsigned iter = 0; iter < max_iterations; ++iter) {
      bool all_frozen = true;
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (frozen[k]) continue;
        evaluate(z[k]);
        mpfr_hypot(t1_.get(), p_.re.get(), p_.im.get(), kRnd);
        mpfr_mul(t2_.get(), gamma_.get(), scale_.get(), kRnd);
        if (mpfr_cmp(t1_.get(), t2_.get()) <= 0) {
          frozen[k] = 1;
          continue;
        }
        all_frozen = false;
        if (step(z, k)) frozen[k] = 1;
      }
      if (all_frozen) return true;
    }
    return false;
  }

  /// |p(z)| / max_k |c_k| max(1,|z|)^k
  double relative_residual(const MpComplex& z) {
    evaluate(z);
    mpfr_hypot(t1_.get(), p_.re.get(), p_.im.get(), kRnd);
    // t2 = max(1, |z|); t3 = running power; s_.re = running max
    mpfr_hypot(t2_.get(), z.re.get(), z.im.get(), kRnd);
    if (mpfr_cmp_ui(t2_.get(), 1) < 0) mpfr_set_ui(t2_.get(), 1, kRnd);
    mpfr_set_ui(t3_.get(), 1, kRnd);
    mpfr_set_zero(s_.re.get(), 1);
    for (std::size_t k = 0; k < abs_coeffs_.size(); ++k) {
      mpfr_mul(s_.im.get(), abs_coeffs_[k].get(), t3_.get(), kRnd);
      if (mpfr_cmp(s_.im.get(), s_.re.get()) > 0) mpfr_set(s_.re.get(), s_.im.get(), kRnd);
      mpfr_mul(t3_.get(), t3_.get(), t2_.get(), kRnd);
    }
    if (s_.re.is_zero()) return 0.0;
    mpfr_div(t1_.get(), t1_.get(), s_.re.get(), kRnd);
    return t1_.to_double();
  }

 private:
  // p_ = p(z), dp_ = p'(z), scale_ = sum |c_k| |z|^k.
  void evaluate(const MpComplex& z) {
    mpfr_set(p_.re.get(), coeffs_[n_].get(), kRnd);
    mpfr_set_zero(p_.im.get(), 1);
    mpfr_set_zero(dp_.re.get(), 1);
    mpfr_set_zero(dp_.im.get(), 1);
    mpfr_set(scale_.get(), abs_coeffs_[n_].get(), kRnd);
    mpfr_hypot(absz_.get(), z.re.get(), z.im.get(), kRnd);
    for (std::size_t k = n_; k-- > 0;) {
      mul_in_place(dp_, z);
      mpfr_add(dp_.re.get(), dp_.re.get(), p_.re.get(), kRnd);
      mpfr_add(dp_.im.get(), dp_.im.get(), p_.im.get(), kRnd);
      mul_in_place(p_, z);
      mpfr_add(p_.re.get(), p_.re.get(), coeffs_[k].get(), kRnd);
      mpfr_fma(scale_.get(), scale_.get(), absz_.get(), abs_coeffs_[k].get(), kRnd);
    }
  }

  void mul_in_place(MpComplex& a, const MpComplex& b) {
    mpfr_fmms(t1_.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), kRnd);
    mpfr_fmma(a.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), kRnd);
    mpfr_swap(a.re.get(), t1_.get());
  }

  // out = a / b; out must not alias a or b.
  void divide(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    mpfr_fmma(t1_.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), kRnd);
    mpfr_fmma(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), kRnd);
    mpfr_fmms(out.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), kRnd);
    mpfr_div(out.re.get(), out.re.get(), t1_.get(), kRnd);
    mpfr_div(out.im.get(), out.im.get(), t1_.get(), kRnd);
  }

  // One Aberth update of z[k]. Returns true when the applied correction was
  // below the rounding unit on the max(1, |z|) scale, which is how roots at
  // the origin (where the relative residual test cannot fire) settle.
  bool step(std::vector<MpComplex>& z, std::size_t k) {
    MpComplex& zk = z[k];
    if (dp_.re.is_zero() && dp_.im.is_zero()) {
      // Stationary point; nudge off it and let the next sweep continue.
      mpfr_set_ui(t1_.get(), 1, kRnd);
      mpfr_mul_2si(t1_.get(), t1_.get(), -static_cast<long>(bits_ / 2), kRnd);
      mpfr_add(zk.re.get(), zk.re.get(), t1_.get(), kRnd);
      mpfr_add(zk.im.get(), zk.im.get(), t1_.get(), kRnd);
      return false;
    }
    divide(q_, p_, dp_);  // Newton correction

    mpfr_set_zero(s_.re.get(), 1);
    mpfr_set_zero(s_.im.get(), 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == k) continue;
      mpfr_sub(w_.re.get(), zk.re.get(), z[j].re.get(), kRnd);
      mpfr_sub(w_.im.get(), zk.im.get(), z[j].im.get(), kRnd);
      mpfr_fmma(t1_.get(), w_.re.get(), w_.re.get(), w_.im.get(), w_.im.get(), kRnd);
      if (mpfr_zero_p(t1_.get())) continue;
      mpfr_ui_div(t1_.get(), 1, t1_.get(), kRnd);
      mpfr_fma(s_.re.get(), w_.re.get(), t1_.get(), s_.re.get(), kRnd);
      mpfr_fms(t2_.get(), w_.im.get(), t1_.get(), s_.im.get(), kRnd);
      mpfr_neg(s_.im.get(), t2_.get(), kRnd);
    }

    // w = q / (1 - q s)
    mpfr_fmms(w_.re.get(), q_.re.get(), s_.re.get(), q_.im.get(), s_.im.get(), kRnd);
    mpfr_fmma(w_.im.get(), q_.re.get(), s_.im.get(), q_.im.get(), s_.re.get(), kRnd);
    mpfr_ui_sub(w_.re.get(), 1, w_.re.get(), kRnd);
    mpfr_neg(w_.im.get(), w_.im.get(), kRnd);
    if (mpfr_zero_p(w_.re.get()) && mpfr_zero_p(w_.im.get())) {
      mpfr_set(w_.re.get(), q_.re.get(), kRnd);
      mpfr_set(w_.im.get(), q_.im.get(), kRnd);
    } else {
      mpfr_swap(s_.re.get(), w_.re.get());  // s_ now holds the denominator
      mpfr_swap(s_.im.get(), w_.im.get());
      divide(w_, q_, s_);
    }
    mpfr_sub(zk.re.get(), zk.re.get(), w_.re.get(), kRnd);
    mpfr_sub(zk.im.get(), zk.im.get(), w_.im.get(), kRnd);

    // |w| <= 4 u max(1, |z|)
    mpfr_hypot(t1_.get(), w_.re.get(), w_.im.get(), kRnd);
    mpfr_hypot(t2_.get(), zk.re.get(), zk.im.get(), kRnd);
    if (mpfr_cmp_ui(t2_.get(), 1) < 0) mpfr_set_ui(t2_.get(), 1, kRnd);
    mpfr_mul_2si(t2_.get(), t2_.get(), 2 - static_cast<long>(bits_), kRnd);
    return mpfr_cmp(t1_.get(), t2_.get()) <= 0;
  }

  mpfr_prec_t bits_;
  std::size_t n_;
  std::vector<MpReal> coeffs_;      // lowest degree first
  std::vector<MpReal> abs_coeffs_;
  MpComplex p_, dp_, q_, s_, w_;
  MpReal absz_, scale_, gamma_, t1_, t2_, t3_;
};

// Initial approximations from the Newton polygon of log|c_k|: each edge of
// the upper convex hull spanning degrees [i, j] puts j - i points on a circle
// of radius (|c_i| / |c_j|)^(1/(j - i)). A root at zero of multiplicity m
// gets m points on a circle inside the smallest annulus. Every circle is
// rotated by kStartAngle plus a per-circle offset so the start breaks the
// even/odd symmetry of the polynomial.
std::vector<MpComplex> initial_approximations(const IntPolynomial& p, mpfr_prec_t bits) {
  const auto& c = p.coeffs();
  const std::size_t n = p.degree();
  std::vector<std::size_t> support;
  std::vector<double> logs;
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] == 0) continue;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, c[k].get_mpz_t());
    support.push_back(k);
    logs.push_back(std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0));
  }

  std::vector<std::size_t> hull;  // indices into support
  for (std::size_t i = 0; i < support.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      const double cross = (static_cast<double>(support[b]) - static_cast<double>(support[a])) * (logs[i] - logs[a]) -
                           (logs[b] - logs[a]) * (static_cast<double>(support[i]) - static_cast<double>(support[a]));
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  struct Circle {
    std::size_t count;
    double radius;
  };
  std::vector<Circle> circles;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t i = hull[h], j = hull[h + 1];
    const double width = static_cast<double>(support[j] - support[i]);
    circles.push_back({support[j] - support[i], std::exp((logs[i] - logs[j]) / width)});
  }
  if (support.front() > 0) {
    double inner = 1.0;
    for (const auto& circle : circles) inner = std::min(inner, circle.radius);
    circles.insert(circles.begin(), {support.front(), 0.5 * inner});
  }

  std::vector<MpComplex> z;
  z.reserve(n);
  MpReal theta(bits), two_pi(bits);
  mpfr_const_pi(two_pi.get(), kRnd);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, kRnd);
  for (std::size_t ci = 0; ci < circles.size(); ++ci) {
    const Circle& circle = circles[ci];
    for (std::size_t k = 0; k < circle.count; ++k) {
      MpComplex zk(bits);
      mpfr_mul_ui(theta.get(), two_pi.get(), static_cast<unsigned long>(k), kRnd);
      mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(circle.count), kRnd);
      mpfr_add_d(theta.get(), theta.get(), kStartAngle + kCircleOffset * static_cast<double>(ci), kRnd);
      mpfr_sin_cos(zk.im.get(), zk.re.get(), theta.get(), kRnd);
      mpfr_mul_d(zk.re.get(), zk.re.get(), circle.radius, kRnd);
      mpfr_mul_d(zk.im.get(), zk.im.get(), circle.radius, kRnd);
      z.push_back(std::move(zk));
    }
  }
  return z;
}

double distance(const MpComplex& a, const MpComplex& b, mpfr_prec_t bits) {
  MpReal dr(bits), di(bits);
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), kRnd);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), kRnd);
  mpfr_hypot(dr.get(), dr.get(), di.get(), kRnd);
  return dr.to_double();
}

double modulus(const MpComplex& a) { return std::hypot(a.re.to_double(), a.im.to_double()); }

bool root_less(const ComplexRoot& a, const ComplexRoot& b) {
  const double ar = a.z.re.to_double(), br = b.z.re.to_double();
  if (ar != br) return ar < br;
  const double ai = a.z.im.to_double(), bi = b.z.im.to_double();
  if (ai != bi) return ai < bi;
  if (int c = compare(a.z.re, b.z.re)) return c < 0;
  return compare(a.z.im, b.z.im) < 0;
}

RootSet finalize(AberthSolver& solver, std::vector<MpComplex> z, const std::vector<double>& drift,
                 unsigned bits) {
  RootSet out;
  out.precision_bits = bits;
  const double unit = std::ldexp(1.0, -static_cast<int>(bits));
  for (std::size_t k = 0; k < z.size(); ++k) {
    ComplexRoot r;
    r.error_estimate = std::max(drift[k], unit * std::max(1.0, modulus(z[k])));
    // Components indistinguishable from zero at the achieved accuracy are
    // reported as exact zeros.
    if (std::abs(z[k].re.to_double()) <= r.error_estimate) mpfr_set_zero(z[k].re.get(), 1);
    if (std::abs(z[k].im.to_double()) <= r.error_estimate) mpfr_set_zero(z[k].im.get(), 1);
    r.residual = solver.relative_residual(z[k]);
    r.z = std::move(z[k]);
    out.residual_bound = std::max(out.residual_bound, r.residual);
    out.roots.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < out.roots.size(); ++j) {
      auto& a = out.roots[i];
      auto& b = out.roots[j];
      if (distance(a.z, b.z, bits) <= 4.0 * (a.error_estimate + b.error_estimate)) a.coincident = b.coincident = true;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), root_less);
  return out;
}

}  // namespace

RootSet solve_polynomial(const IntPolynomial& p, const SolveConfig& cfg) {
  if (p.degree() == 0) fail(ErrorKind::DegreeZero, "polynomial is constant");
  require(cfg.start_bits >= 53, "start precision must be at least 53 bits");
  require(cfg.max_bits >= cfg.start_bits, "max precision below start precision");
  require(cfg.tolerance > 0.0, "tolerance must be positive");

  const std::size_t n = p.degree();
  std::optional<std::vector<MpComplex>> previous;
  bool previous_converged = false;
  for (unsigned bits = cfg.start_bits; bits <= cfg.max_bits; bits *= 2) {
    AberthSolver solver(p, bits);
    std::vector<MpComplex> z;
    if (previous) {
      z = std::move(*previous);
      for (auto& zk : z) zk.round_to(bits);
    } else {
      z = initial_approximations(p, bits);
    }
    std::vector<MpComplex> start = z;
    const bool converged = solver.run(z, cfg.max_iterations);

    if (converged && previous_converged) {
      std::vector<double> drift(n);
      bool stable = true;
      for (std::size_t k = 0; k < n && stable; ++k) {
        drift[k] = distance(z[k], start[k], bits);
        stable = drift[k] <= cfg.tolerance * std::max(1.0, modulus(z[k]));
      }
      if (stable) {
        RootSet out = finalize(solver, z, drift, bits);
        if (out.residual_bound <= cfg.tolerance) return out;
      }
    }
    previous = std::move(z);
    previous_converged = converged;
  }
  fail(ErrorKind::PrecisionExhausted,
       "no convergence within " + std::to_string(cfg.max_bits) + " bits for degree " + std::to_string(n));
}

RootSet solve(const ShiftedProblem& problem, const SolveConfig& cfg) {
  require(problem.n >= 1, "path graph order must be at least 1");
  return solve_polynomial(problem.shifted, cfg);
}

// ---------------------------------------------------------------------------
// Sturm chains

namespace {

int sign_at_minus_infinity(const IntPolynomial& p) {
  const int s = sgn(p.leading());
  return p.degree() % 2 ? -s : s;
}

std::uint64_t variations(const std::vector<int>& signs) {
  std::uint64_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

IntPolynomial primitive(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return p;
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

// Pseudo-remainder: lc(b)^e a = q b + r for some e >= 0; reports the sign of
// lc(b)^e so callers can keep the Sturm sign convention.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, bool& multiplier_negative) {
  const std::size_t db = b.degree();
  const BigInt lc = b.leading();
  std::size_t steps = 0;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const IntPolynomial sub = IntPolynomial::monomial(r.leading(), r.degree() - db) * b;
    r *= lc;
    r -= sub;
    ++steps;
  }
  multiplier_negative = lc < 0 && steps % 2 == 1;
  return r;
}

}  // namespace

RealRootCount count_real_roots(const IntPolynomial& input) {
  require(!input.is_zero(), "cannot count roots of the zero polynomial");
  // Remove the root at zero (with its multiplicity) so that 0 is never a
  // root of the polynomial the chain is evaluated on.
  std::size_t zero_mult = 0;
  while (input.coeff(zero_mult) == 0) ++zero_mult;
  IntPolynomial p(std::vector<BigInt>(input.coeffs().begin() + static_cast<std::ptrdiff_t>(zero_mult),
                                      input.coeffs().end()));
  RealRootCount out;
  out.count = zero_mult > 0 ? 1 : 0;
  if (p.degree() == 0) return out;

  std::vector<IntPolynomial> chain{primitive(p), primitive(p.derivative())};
  while (chain.back().degree() > 0) {
    bool negative = false;
    IntPolynomial r = pseudo_remainder(chain[chain.size() - 2], chain.back(), negative);
    if (r.is_zero()) break;
    chain.push_back(primitive(negative ? r : -r));
  }

  std::vector<int> at_minus, at_plus, at_zero;
  for (const auto& q : chain) {
    at_minus.push_back(sign_at_minus_infinity(q));
    at_plus.push_back(sgn(q.leading()));
    at_zero.push_back(sgn(q.coeff(0)));
  }
  const std::uint64_t v_minus = variations(at_minus);
  out.count += v_minus - variations(at_plus);
  out.negative_count = v_minus - variations(at_zero);
  return out;
}

RealRootCount real_root_count_exact(const ShiftedProblem& problem) { return count_real_roots(problem.shifted); }

std::vector<MpReal> path_zero_roots(std::uint64_t n, unsigned bits) {
  require(n >= 1, "path graph order must be at least 1");
  std::vector<MpReal> out;
  out.reserve(n);
  MpReal pi(bits);
  mpfr_const_pi(pi.get(), kRnd);
  // r_s = -r_{n+1-s}, so only s <= (n+1)/2 is computed; the middle root of
  // an odd order is exactly zero.
  std::vector<MpReal> upper;
  for (std::uint64_t s = 1; 2 * s < n + 1; ++s) {
    MpReal r(bits);
    mpfr_mul_ui(r.get(), pi.get(), static_cast<unsigned long>(s), kRnd);
    mpfr_div_ui(r.get(), r.get(), static_cast<unsigned long>(n + 1), kRnd);
    mpfr_cos(r.get(), r.get(), kRnd);
    mpfr_mul_2ui(r.get(), r.get(), 1, kRnd);
    upper.push_back(std::move(r));
  }
  for (const MpReal& r : upper) {
    MpReal neg(r);
    mpfr_neg(neg.get(), neg.get(), kRnd);
    out.push_back(std::move(neg));
  }
  if (n % 2 == 1) out.emplace_back(bits);
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out.push_back(*it);
  return out;
}

}  // namespace pathspec
