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

#ifndef PATHSPEC_MPREAL_HPP
#define PATHSPEC_MPREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace pathspec {

/// Owning handle for an mpfr_t with an explicit significand size.
///
/// Copies take the source's precision. Arithmetic is done through the raw
/// mpfr_* calls on get(); the hot loops reuse preallocated values instead of
/// creating temporaries.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits = 53) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  MpReal(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  MpReal(const mpz_class& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  MpReal(const MpReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  MpReal& operator=(const MpReal& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Re-rounds the current value to `bits`.
  void round_to(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  friend int compare(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

struct MpComplex {
  MpReal re;
  MpReal im;

  explicit MpComplex(mpfr_prec_t bits = 53) : re(bits), im(bits) {}
  void round_to(mpfr_prec_t bits) {
    re.round_to(bits);
    im.round_to(bits);
  }
};

inline std::string MpReal::to_string(int digits) const {
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
  std::string out = text ? text : "";
  mpfr_free_str(text);
  return out;
}

}  // namespace pathspec

#endif  // PATHSPEC_MPREAL_HPP
