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

#ifndef PATHSPEC_SEQ_HPP
#define PATHSPEC_SEQ_HPP

#include <gmpxx.h>

#include <cstdint>

#include "report.hpp"

namespace pathspec {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_decimal(const BigInt& value);

namespace seq {

/// F_n with F_0 = 0, F_1 = 1.
BigInt fibonacci(std::uint64_t n);

/// P_n with P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
BigInt pell(std::uint64_t n);

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Checks sum_{j=0}^{2k} C(4k - j, j) == F_{4k+1} exactly.
Report fib_binomial_identity_check(std::uint64_t k);

}  // namespace seq
}  // namespace pathspec

#endif  // PATHSPEC_SEQ_HPP
