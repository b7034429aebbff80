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

#include "oracles.hpp"
#include "poly.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fforder {
namespace {

Poly random_poly(const Field& F, std::mt19937_64& rng, unsigned degree) {
  std::vector<Elem> c(degree + 1);
  for (auto& x : c) x = F.element(rng() % F.q());
  if (c.back().v == 0) c.back() = F.one();
  return Poly(std::move(c));
}

TEST(Poly, DivmodIdentity) {
  for (const Field& F : {Field::prime(7), Field::make(2, 3), Field::make(3, 2)}) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(F, rng, static_cast<unsigned>(rng() % 12));
      const Poly b = random_poly(F, rng, static_cast<unsigned>(rng() % 6));
      const auto [q, r] = poly::divmod(F, a, b);
      EXPECT_LT(r.degree(), b.degree());
      EXPECT_EQ(poly::add(F, poly::mul(F, q, b), r), a);
      EXPECT_EQ(r, oracle::remainder(F, a, b));
    }
  }
  EXPECT_THROW((void)poly::divmod(Field::prime(3), poly::x(), Poly{}), Error);
}

TEST(Poly, GcdDividesBoth) {
  const Field F = Field::prime(5);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Poly c = random_poly(F, rng, 2);
    const Poly a = poly::mul(F, c, random_poly(F, rng, 3));
    const Poly b = poly::mul(F, c, random_poly(F, rng, 4));
    const Poly g = poly::gcd(F, a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(poly::rem(F, a, g).is_zero());
    EXPECT_TRUE(poly::rem(F, b, g).is_zero());
    EXPECT_TRUE(poly::rem(F, g, poly::monic(F, c)).is_zero());
  }
  EXPECT_TRUE(poly::gcd(F, Poly{}, Poly{}).is_zero());
}

TEST(Poly, PowmodMatchesRepeatedMultiplication) {
  const Field F = Field::make(2, 2);
  const Poly m = poly::find_irreducible(F, 5);
  std::mt19937_64 rng(5);
  const Poly a = random_poly(F, rng, 4);
  Poly acc = poly::constant(F.one());
  for (unsigned e = 0; e < 70; ++e) {
    EXPECT_EQ(poly::powmod(F, a, e, m), poly::rem(F, acc, m));
    acc = poly::rem(F, poly::mul(F, acc, a), m);
  }
}

class Irreducibility : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Irreducibility, AgreesWithBruteForce) {
  const auto [q_spec, max_degree] = GetParam();
  const Field F = q_spec == 4 ? Field::make(2, 2) : Field::prime(static_cast<std::uint64_t>(q_spec));
  for (unsigned n = 1; n <= static_cast<unsigned>(max_degree); ++n) {
    std::uint64_t count = 0;
    for (const Poly& f : oracle::monic_polys(F, n)) {
      const bool expected = oracle::is_irreducible_brute(F, f);
      ASSERT_EQ(poly::is_irreducible(F, f), expected) << format_poly(F, f);
      count += expected ? 1 : 0;
    }
    EXPECT_EQ(count, oracle::irreducible_count(F.q(), n)) << "degree " << n;
  }
}

INSTANTIATE_TEST_SUITE_P(Small, Irreducibility,
                         ::testing::Values(std::pair{2, 8}, std::pair{3, 5}, std::pair{4, 4}, std::pair{5, 3}));

TEST(Poly, IrreducibleCountsAtHigherDegree) {
  // Counting via is_irreducible against the necklace formula where brute
  // force is out of reach.
  const Field F = Field::prime(2);
  for (unsigned n = 9; n <= 12; ++n) {
    std::uint64_t count = 0;
    for (const Poly& f : oracle::monic_polys(F, n)) count += poly::is_irreducible(F, f) ? 1 : 0;
    EXPECT_EQ(count, oracle::irreducible_count(2, n));
  }
}

TEST(Factor, RoundTripAndIrreducibleFactors) {
  for (const Field& F : {Field::prime(2), Field::prime(3), Field::make(2, 2), Field::prime(7), Field::make(3, 2)}) {
    std::mt19937_64 rng(F.q());
    for (int i = 0; i < 60; ++i) {
      Poly f = random_poly(F, rng, 1 + static_cast<unsigned>(rng() % 9));
      if (i % 3 == 0) f = poly::mul(F, f, poly::mul(F, f, random_poly(F, rng, 2)));
      const auto fac = poly::factor(F, f, static_cast<std::uint64_t>(i));
      EXPECT_EQ(poly::expand(F, fac), f);
      for (std::size_t j = 0; j < fac.factors.size(); ++j) {
        const Poly& g = fac.factors[j].first;
        EXPECT_TRUE(g.is_monic());
        if (g.degree() <= 6) {
          EXPECT_TRUE(oracle::is_irreducible_brute(F, g)) << format_poly(F, g);
        }
        if (j > 0) {
          EXPECT_TRUE(poly_less(fac.factors[j - 1].first, g));
        }
      }
    }
  }
}

TEST(Factor, RepeatedFactorsInEveryCharacteristic) {
  const Field F2 = Field::prime(2);
  const Poly g = parse_poly(F2, "1,1,1");  // X^2 + X + 1
  Poly f = poly::constant(F2.one());
  for (int i = 0; i < 4; ++i) f = poly::mul(F2, f, g);
  f = poly::mul(F2, f, parse_poly(F2, "1,1"));
  const auto fac = poly::factor(F2, f);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0], (std::pair{parse_poly(F2, "1,1"), 1u}));
  EXPECT_EQ(fac.factors[1], (std::pair{g, 4u}));

  const Field F3 = Field::prime(3);
  Poly h = poly::mul(F3, parse_poly(F3, "1,1"), poly::mul(F3, parse_poly(F3, "1,1"), parse_poly(F3, "1,1")));
  h = poly::mul(F3, h, poly::mul(F3, parse_poly(F3, "1,0,1"), parse_poly(F3, "1,0,1")));
  h = poly::scale(F3, h, {2});
  const auto hf = poly::factor(F3, h);
  EXPECT_EQ(hf.unit.v, 2u);
  ASSERT_EQ(hf.factors.size(), 2u);
  EXPECT_EQ(hf.factors[0].second, 3u);
  EXPECT_EQ(hf.factors[1].second, 2u);
}

TEST(Factor, SeedDoesNotChangeTheResult) {
  const Field F = Field::prime(5);
  const Poly f = parse_poly(F, "4,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1");  // X^25 - 1
  const auto a = poly::factor(F, f, 1);
  const auto b = poly::factor(F, f, 99);
  EXPECT_EQ(a.factors, b.factors);
}

TEST(Factor, RejectsConstants) {
  EXPECT_THROW((void)poly::factor(Field::prime(3), Poly{}), Error);
  EXPECT_THROW((void)poly::factor(Field::prime(3), poly::constant({2})), Error);
}

TEST(FindIrreducible, LexSmallestAndIrreducible) {
  const Field F = Field::prime(2);
  EXPECT_EQ(poly::find_irreducible(F, 2), parse_poly(F, "1,1,1"));
  EXPECT_EQ(poly::find_irreducible(F, 3), parse_poly(F, "1,0,1,1"));
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_TRUE(oracle::is_irreducible_brute(F, poly::find_irreducible(F, n)));
  }
}

TEST(PolyText, RoundTrip) {
  const Field F = Field::prime(3);
  const Poly f = parse_poly(F, "1,0,2,0,1");
  EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(format_poly(F, f), "1,0,2,0,1");
  EXPECT_EQ(pretty_poly(F, f), "X^4 + 2X^2 + 1");
  EXPECT_EQ(pretty_poly(Field::prime(2), parse_poly(Field::prime(2), "1,1,0,0,0,0,0,0,0,1")), "X^9 + X + 1");
  EXPECT_THROW((void)parse_poly(F, "1,,2"), Error);
  EXPECT_THROW((void)parse_poly(F, "1,3"), Error);
}

TEST(Poly, DerivativeAndEval) {
  const Field F = Field::prime(5);
  const Poly f = parse_poly(F, "1,2,3,4");  // 4X^3 + 3X^2 + 2X + 1
  EXPECT_EQ(poly::derivative(F, f), parse_poly(F, "2,1,2"));
  for (std::uint64_t x = 0; x < 5; ++x) {
    EXPECT_EQ(poly::eval(F, f, {x}).v, (1 + 2 * x + 3 * x * x + 4 * x * x * x) % 5);
  }
}

}  // namespace
}  // namespace fforder
