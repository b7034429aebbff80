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
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include <random>

namespace fforder {
namespace {

u128 pow2(unsigned e) { return u128{1} << e; }

TEST(IsPrime, MatchesTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
}

TEST(IsPrime, KnownLargeValues) {
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(is_prime(pow2(89) - 1));
  EXPECT_TRUE(is_prime(pow2(127) - 1));
  EXPECT_FALSE(is_prime(pow2(67) - 1));  // 193707721 * 761838257287
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(std::uint64_t{4294967291} * 4294967279ULL));
}

TEST(FactorInteger, MatchesTrialDivision) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const auto f = factor_integer(n);
    std::map<std::uint64_t, unsigned> got;
    for (const auto& [p, e] : f.factors) got[static_cast<std::uint64_t>(p)] = e;
    EXPECT_EQ(got, oracle::factor_trial(n)) << n;
  }
}

TEST(FactorInteger, RecomposesRandomProducts) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const u128 a = rng() >> 20;
    const u128 b = rng() >> 24;
    const u128 n = a * b + 1;
    const auto f = factor_integer(n);
    EXPECT_TRUE(f.recompose() == n);
    for (const auto& [p, e] : f.factors) EXPECT_TRUE(is_prime(p)) << to_string(p);
  }
}

TEST(FactorInteger, FermatProduct) {
  // 2^128 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 274177 * 6700417 * 67280421310721
  const auto f = factor_integer(~u128{0});
  std::vector<std::string> primes;
  for (const auto& [p, e] : f.factors) {
    EXPECT_EQ(e, 1u);
    primes.push_back(to_string(p));
  }
  EXPECT_EQ(primes, (std::vector<std::string>{"3", "5", "17", "257", "641", "65537", "274177", "6700417",
                                              "67280421310721"}));
}

TEST(FactorInteger, RejectsZero) {
  try {
    (void)factor_integer(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(FactorPowerMinusOne, RecomposesAndIsPrime) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 25, 81}) {
    for (unsigned n = 1; n <= 24; ++n) {
      if (n * std::log2(static_cast<double>(q)) > 127.5) continue;
      const u128 qn1 = checked_pow_minus_one(q, n);
      const auto f = factor_power_minus_one(q, n);
      EXPECT_TRUE(f.n == qn1);
      EXPECT_TRUE(f.recompose() == qn1) << q << "^" << n;
      for (const auto& [p, e] : f.factors) EXPECT_TRUE(is_prime(p));
    }
  }
}

TEST(FactorPowerMinusOne, WidthCap) {
  EXPECT_THROW((void)factor_power_minus_one(2, 129), Error);
  try {
    (void)factor_power_minus_one(3, 40, 32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderWidth);
  }
  EXPECT_NO_THROW((void)factor_power_minus_one(2, 128));
  EXPECT_TRUE(checked_pow_minus_one(2, 128) == ~u128{0});
  EXPECT_THROW((void)checked_pow_minus_one(3, 81), Error);
  EXPECT_TRUE(checked_pow_minus_one(7, 0) == 0);
}

TEST(OrderFromGroup, MatchesNaiveOrderModP) {
  for (std::uint64_t p : {7, 13, 101, 257, 1009}) {
    const auto group = factor_integer(p - 1);
    for (std::uint64_t x = 1; x < p; ++x) {
      auto pow_is_one = [&](u128 e) {
        std::uint64_t acc = 1;
        std::uint64_t b = x;
        for (u128 k = e; k > 0; k >>= 1) {
          if (k & 1) acc = acc * b % p;
          b = b * b % p;
        }
        return acc == 1;
      };
      const auto naive = oracle::naive_order<std::uint64_t>(x, 1, [&](std::uint64_t a, std::uint64_t b) {
        return a * b % p;
      });
      EXPECT_TRUE(order_from_group(group, pow_is_one) == naive) << p << " " << x;
    }
  }
}

TEST(Common, CheckedPowAndFormatting) {
  EXPECT_EQ(to_string(checked_pow(3, 4)), "81");
  EXPECT_EQ(to_string(checked_pow(2, 127)), "170141183460469231731687303715884105728");
  EXPECT_EQ(to_string(0), "0");
  EXPECT_THROW((void)checked_pow(2, 128), Error);
  EXPECT_EQ(bit_width(0), 0u);
  EXPECT_EQ(bit_width(255), 8u);
  EXPECT_EQ(bit_width(~u128{0}), 128u);
}

}  // namespace
}  // namespace fforder
