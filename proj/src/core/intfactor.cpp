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

#include "intfactor.hpp"

#include <array>
#include <vector>

namespace fforder {

namespace {

using boost::multiprecision::uint256_t;

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 mulmod(u128 a, u128 b, u128 n) {
  if ((n >> 64) == 0) return (a % n) * (b % n) % n;
  uint256_t prod = uint256_t(static_cast<std::uint64_t>(a >> 64));
  prod <<= 64;
  prod += static_cast<std::uint64_t>(a);
  uint256_t rhs = uint256_t(static_cast<std::uint64_t>(b >> 64));
  rhs <<= 64;
  rhs += static_cast<std::uint64_t>(b);
  uint256_t mod = uint256_t(static_cast<std::uint64_t>(n >> 64));
  mod <<= 64;
  mod += static_cast<std::uint64_t>(n);
  prod = (prod * rhs) % mod;
  const auto lo = static_cast<std::uint64_t>(prod & uint256_t(~std::uint64_t{0}));
  const auto hi = static_cast<std::uint64_t>(prod >> 64);
  return (u128{hi} << 64) | lo;
}

u128 powmod(u128 base, u128 e, u128 n) {
  u128 result = 1 % n;
  base %= n;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return result;
}

bool miller_rabin(u128 n, u128 a) {
  a %= n;
  if (a == 0) return true;
  u128 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u128 rho_step(u128 x, u128 c, u128 n) { return (mulmod(x, x, n) + c) % n; }

// Brent's variant. Returns a nontrivial divisor or n on failure for this c.
u128 brent_rho(u128 n, u128 c) {
  constexpr u128 kBatch = 128;
  u128 y = 2;
  u128 x = y;
  u128 ys = y;
  u128 g = 1;
  u128 prod = 1;
  u128 r = 1;
  do {
    x = y;
    for (u128 i = 0; i < r; ++i) y = rho_step(y, c, n);
    u128 k = 0;
    do {
      ys = y;
      const u128 steps = (kBatch < r - k) ? kBatch : r - k;
      for (u128 i = 0; i < steps; ++i) {
        y = rho_step(y, c, n);
        prod = mulmod(prod, x > y ? x - y : y - x, n);
      }
      g = gcd(prod, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = rho_step(ys, c, n);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_into(u128 n, std::map<u128, unsigned>& factors) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++factors[n];
    return;
  }
  for (u128 c = 1;; ++c) {
    const u128 d = brent_rho(n, c);
    if (d != n && d != 1) {
      split_into(d, factors);
      split_into(n / d, factors);
      return;
    }
  }
}

}  // namespace

u128 IntFactorization::recompose() const {
  u128 out = 1;
  for (const auto& [prime, mult] : factors) {
    for (unsigned i = 0; i < mult; ++i) out *= prime;
  }
  return out;
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint32_t, 20> kBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                           31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (const auto p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if ((n >> 64) == 0) {
    static constexpr std::array<std::uint64_t, 7> kBases64 = {2,      325,     9375,      28178,
                                                              450775, 9780504, 1795265022};
    for (const auto a : kBases64) {
      if (!miller_rabin(n, a)) return false;
    }
    return true;
  }
  for (const auto a : kBases) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

IntFactorization factor_integer(u128 n) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "cannot factor 0");
  IntFactorization out;
  out.n = n;
  u128 rest = n;
  for (const auto p : small_primes()) {
    if (u128{p} * p > rest) break;
    while (rest % p == 0) {
      ++out.factors[p];
      rest /= p;
    }
  }
  if (rest == 1) return out;
  // Every factor below 10^6 is gone, so a cofactor below 10^12 is prime.
  if (rest < u128{kTrialBound} * kTrialBound) {
    ++out.factors[rest];
    return out;
  }
  split_into(rest, out.factors);
  return out;
}

IntFactorization factor_power_minus_one(std::uint64_t q, unsigned n, unsigned max_bits) {
  if (q < 2 || n == 0) throw Error(ErrorCode::PreconditionFailed, "need q >= 2 and n >= 1");
  u128 total = 0;
  try {
    total = checked_pow_minus_one(q, n);
  } catch (const Error&) {
    throw Error(ErrorCode::OrderWidth, "q^n - 1 exceeds 128 bits");
  }
  if (bit_width(total) > max_bits) {
    throw Error(ErrorCode::OrderWidth,
                "q^n - 1 needs " + std::to_string(bit_width(total)) + " bits, cap is " +
                    std::to_string(max_bits));
  }

  // Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q), built for d | n in
  // increasing order.
  std::map<unsigned, u128> cyclotomic;
  IntFactorization out;
  out.n = total;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    u128 value = checked_pow_minus_one(q, d);
    for (const auto& [e, phi] : cyclotomic) {
      if (d % e == 0) value /= phi;
    }
    cyclotomic[d] = value;
    for (const auto& [prime, mult] : factor_integer(value).factors) out.factors[prime] += mult;
  }
  return out;
}

}  // namespace fforder
