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

#include "action.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace fforder {
namespace {

TEST(BuildFAr, Examples) {
  const Field F3 = Field::prime(3);
  const Mat2 swap = make_mat2(F3, {0}, {1}, {1}, {0});
  EXPECT_EQ(build_FAr(swap, 1), parse_poly(F3, "2,0,0,0,1"));  // X^4 - 1
  EXPECT_EQ(FAr_degree(swap, 1), 4u);
  EXPECT_EQ(build_FAr(swap, 2).degree(), 10);

  const Mat2 diag = make_mat2(F3, {1}, {0}, {0}, {2});
  EXPECT_EQ(FAr_degree(diag, 2), 9u);
  EXPECT_EQ(build_FAr(diag, 2), parse_poly(F3, "0,2,0,0,0,0,0,0,0,2"));  // -X^9 + 2X

  // r = 0: bX^2 + (d - a)X - c
  const Mat2 A = make_mat2(F3, {1}, {2}, {1}, {0});
  EXPECT_EQ(build_FAr(A, 0), parse_poly(F3, "2,2,2"));
}

TEST(BuildFAr, DegreeCap) {
  const Field F = Field::prime(3);
  const Mat2 A = make_mat2(F, {0}, {1}, {1}, {0});
  Caps caps;
  caps.degree = 100;
  EXPECT_NO_THROW((void)build_FAr(A, 4, caps));  // 82
  try {
    (void)build_FAr(A, 5, caps);  // 244
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCap);
  }
}

TEST(Census, Examples) {
  const Field F3 = Field::prime(3);
  const Mat2 swap = make_mat2(F3, {0}, {1}, {1}, {0});
  const auto c1 = factor_census(swap, 1);
  EXPECT_EQ(c1.degrees, (std::map<std::uint64_t, std::uint64_t>{{1, 2}, {2, 1}}));
  EXPECT_EQ(c1.N_Dr, 1u);
  const auto c2 = factor_census(swap, 2);
  EXPECT_EQ(c2.degrees, (std::map<std::uint64_t, std::uint64_t>{{1, 2}, {4, 2}}));

  const Field F2 = Field::prime(2);
  const auto c3 = factor_census(make_mat2(F2, {0}, {1}, {1}, {1}), 3);
  EXPECT_EQ(c3.degrees, (std::map<std::uint64_t, std::uint64_t>{{9, 1}}));
  EXPECT_EQ(c3.N_Dr, 1u);
  EXPECT_EQ(c3.factorization.factors[0].first, parse_poly(F2, "1,1,0,0,0,0,0,0,0,1"));
}

TEST(DegreeMenu, Allowed) {
  EXPECT_TRUE(degree_allowed(1, 3, 4));
  EXPECT_TRUE(degree_allowed(2, 3, 4));
  EXPECT_TRUE(degree_allowed(12, 3, 4));  // k = 4
  EXPECT_TRUE(degree_allowed(3, 3, 4));   // k = 1, gcd(4, 3) = 1
  EXPECT_TRUE(degree_allowed(6, 3, 4));   // k = 2, gcd(2, 3) = 1
  EXPECT_FALSE(degree_allowed(6, 3, 3));  // k = 2 does not divide 3
  EXPECT_FALSE(degree_allowed(3, 3, 3));  // k = 1, gcd(3, 3) = 3
  EXPECT_TRUE(degree_allowed(9, 3, 3));
  EXPECT_FALSE(degree_allowed(5, 3, 4));
  EXPECT_FALSE(degree_allowed(3, 2, 0));
}

// Every root of F_{A,r} satisfies theta^(q^r) = A o theta. Roots of a factor g
// of degree >= 2 are the class of X in F_q[X]/(g); linear factors give roots in F_q.
void check_roots(const Mat2& A, unsigned r) {
  const Field& F = A.field;
  const auto census = factor_census(A, r);
  const u128 qr = checked_pow(F.q(), r);
  for (const auto& [g, mult] : census.factorization.factors) {
    if (g.degree() == 1) {
      const Elem root = F.neg(g.c[0]);
      EXPECT_EQ(F.pow(root, qr), root);
      const Elem den = F.add(F.mul(F.neg(A.b), root), A.a);
      if (den.v != 0) {
        EXPECT_EQ(F.div(F.sub(F.mul(A.d, root), A.c), den), root) << format_mat2(A);
      }
      continue;
    }
    const ExtensionField E(F, g);
    const Poly theta = E.generator();
    EXPECT_EQ(E.frobenius(theta, r), act_element(A, E, theta)) << format_mat2(A) << " r=" << r;
    EXPECT_TRUE(invariance_check(A, g)) << format_poly(F, g);
  }
}

TEST(Census, RootsSatisfyFrobeniusIdentityAndMenu) {
  for (const Field& F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (const Mat2& A : class_representatives(F)) {
      for (unsigned r = 1; r <= 3; ++r) {
        if (FAr_degree(A, r) > 300) continue;
        const auto census = compute_census(A, r);
        EXPECT_TRUE(census.violations.empty()) << format_mat2(A) << " r=" << r;
        check_roots(A, r);
      }
    }
  }
}

TEST(ActPoly, MonicSameDegreeIrreducible) {
  const Field F = Field::prime(3);
  const auto reps = class_representatives(F);
  for (unsigned n = 2; n <= 4; ++n) {
    for (const Poly& f : oracle::monic_polys(F, n)) {
      if (!oracle::is_irreducible_brute(F, f)) continue;
      for (const Mat2& A : reps) {
        const Poly g = act_poly(A, f);
        EXPECT_TRUE(g.is_monic());
        EXPECT_EQ(g.degree(), f.degree());
        EXPECT_TRUE(oracle::is_irreducible_brute(F, g));
      }
    }
  }
}

TEST(ActPoly, ScalarClassesActTrivially) {
  const Field F = Field::prime(5);
  const Poly f = poly::find_irreducible(F, 3);
  EXPECT_EQ(act_poly(make_mat2(F, {3}, {0}, {0}, {3}), f), f);
  EXPECT_EQ(act_poly(mul(make_mat2(F, {1}, {2}, {3}, {2}), make_mat2(F, {2}, {0}, {0}, {2})), f),
            act_poly(make_mat2(F, {1}, {2}, {3}, {2}), f));
}

TEST(ActPoly, CompositionConvention) {
  // [A] o ([B] o f) = [AB] o f.
  const Field F = Field::prime(3);
  const auto reps = class_representatives(F);
  std::vector<Poly> polys;
  for (unsigned n = 2; n <= 3; ++n) {
    for (const Poly& f : oracle::monic_polys(F, n)) {
      if (oracle::is_irreducible_brute(F, f)) polys.push_back(f);
    }
  }
  for (const Poly& f : polys) {
    for (const Mat2& A : reps) {
      for (const Mat2& B : reps) {
        EXPECT_EQ(act_poly(A, act_poly(B, f)), act_poly(mul(A, B), f));
      }
    }
  }
}

TEST(ActPoly, Errors) {
  const Field F = Field::prime(3);
  const Mat2 A = make_mat2(F, {0}, {1}, {1}, {0});
  try {
    (void)act_poly(A, parse_poly(F, "1,1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooSmall);
  }
  try {
    (void)act_poly(A, parse_poly(F, "2,0,1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
}

TEST(ActElement, Errors) {
  const Field F = Field::prime(3);
  const ExtensionField E(F, parse_poly(F, "1,0,1"));
  const Mat2 A = make_mat2(F, {0}, {1}, {1}, {0});
  try {
    (void)act_element(A, E, E.from_base({2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BaseFieldElement);
  }
  const Field F5 = Field::prime(5);
  try {
    (void)act_element(make_mat2(F5, {0}, {1}, {1}, {0}), E, E.generator());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(VerifyCensus, InvarianceOfEveryNonlinearFactor) {
  const Field F = Field::prime(3);
  const auto check = verify_census(make_mat2(F, {0}, {1}, {1}, {0}), 2);
  EXPECT_EQ(check.violations(), 0u);
  EXPECT_EQ(check.invariance_checked, 2u);
}

}  // namespace
}  // namespace fforder
