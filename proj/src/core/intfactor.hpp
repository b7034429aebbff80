/*
   Copyright 2026 The fforder Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "common.hpp"

#include <map>

namespace fforder {

struct IntFactorization {
  u128 n = 1;
  std::map<u128, unsigned> factors;  // prime -> multiplicity

  [[nodiscard]] u128 recompose() const;
};

/// Miller-Rabin with fixed bases. Deterministic below 3.3e24; above that the
/// 20 prime bases leave no known counterexample but are not a proof.
bool is_prime(u128 n);

/// Trial division by the primes below 10^6, then Brent's rho on the cofactor.
IntFactorization factor_integer(u128 n);

/// Factors q^n - 1 through its cyclotomic pieces Phi_d(q), d | n, which keeps
/// the rho inputs small. Throws OrderWidth when q^n - 1 needs more than
/// max_bits bits.
IntFactorization factor_power_minus_one(std::uint64_t q, unsigned n, unsigned max_bits = 128);

/// Least e dividing group.n with pow_is_one(e) true, found by stripping prime
/// factors from the group order one at a time.
template <class PowIsOne>
u128 order_from_group(const IntFactorization& group, PowIsOne&& pow_is_one) {
  u128 e = group.n;
  for (const auto& [ell, mult] : group.factors) {
    for (unsigned i = 0; i < mult; ++i) {
      if (!pow_is_one(e / ell)) break;
      e /= ell;
    }
  }
  return e;
}

}  // namespace fforder
