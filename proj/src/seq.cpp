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

#include "seq.hpp"

namespace pathspec {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

namespace seq {

BigInt fibonacci(std::uint64_t n) {
  BigInt out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt pell(std::uint64_t n) {
  BigInt prev = 0, cur = 1;
  if (n == 0) return prev;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Report fib_binomial_identity_check(std::uint64_t k) {
  Report report("fib_binomial_identity", {{"k", k}});
  BigInt sum = 0;
  for (std::uint64_t j = 0; j <= 2 * k; ++j) sum += binomial(4 * k - j, j);
  const BigInt fib = fibonacci(4 * k + 1);
  report.witnesses["binomial_sum"] = to_decimal(sum);
  report.witnesses["fibonacci"] = to_decimal(fib);
  return report.finish(sum == fib);
}

}  // namespace seq
}  // namespace pathspec
