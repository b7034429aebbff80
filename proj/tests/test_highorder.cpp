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

#include "highorder.hpp"
#include "oracles.hpp"
#include "report.hpp"

#include <gtest/gtest.h>

#include <set>

namespace fforder {
namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Mat2 golden() { return make_mat2(F2, {0}, {1}, {1}, {1}); }
Mat2 swap3() { return make_mat2(F3, {0}, {1}, {1}, {0}); }

TEST(GenericRoot, Examples) {
  const auto a = generic_root(swap3(), 1);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->factor, parse_poly(F3, "1,0,1"));
  EXPECT_EQ(a->D, 2u);
  EXPECT_EQ(a->ext.mul(a->theta, a->theta), a->ext.from_base({2}));

  const auto b = generic_root(golden(), 3);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->factor, parse_poly(F2, "1,1,0,0,0,0,0,0,0,1"));
  EXPECT_TRUE(b->group.n == 511);

  // F_{A,2} = (X^2 + X + 1)(X^3 + X^2 + 1) has no factor of degree 6.
  EXPECT_FALSE(generic_root(golden(), 2).has_value());
}

TEST(GenericRoot, OrderWidthCap) {
  Caps caps;
  caps.order_bits = 8;
  try {
    (void)generic_root(golden(), 3, caps);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderWidth);
  }
}

TEST(GenericRoot, FrobeniusMatchesActionForAllSmallClasses) {
  for (const Field& F : {Field::prime(2), Field::prime(3), Field::make(2, 2), Field::prime(5)}) {
    int found = 0;
    for (const Mat2& A : class_representatives(F)) {
      for (unsigned r = 1; r <= 3; ++r) {
        const auto D = pgl_order(A);
        if (D * r > 12 || FAr_degree(A, r) > 200) continue;
        const auto root = generic_root(A, r);
        if (!root) continue;
        ++found;
        EXPECT_TRUE(frobenius_matches_action(*root)) << format_mat2(A) << " r=" << r;
        EXPECT_EQ(root->factor.degree(), static_cast<long>(D * r));
        EXPECT_TRUE(poly::rem(F, build_FAr(A, r), root->factor).is_zero());
        for (std::uint64_t al = 0; al < F.q(); ++al) {
          const GenericRoot shifted = shift_root(*root, {al});
          EXPECT_TRUE(frobenius_matches_action(shifted)) << format_mat2(A) << " alpha=" << al;
          EXPECT_TRUE(poly::rem(F, build_FAr(shifted.A, r), shifted.factor).is_zero());
        }
      }
    }
    EXPECT_GT(found, 0);
  }
}

TEST(TaylorShift, RootMovesByAlpha) {
  const Field F = Field::prime(5);
  const Poly f = parse_poly(F, "1,2,0,3,1");
  for (std::uint64_t al = 0; al < 5; ++al) {
    const Poly g = taylor_shift(F, f, {al});
    for (std::uint64_t x = 0; x < 5; ++x) {
      EXPECT_EQ(poly::eval(F, g, F.add({x}, {al})), poly::eval(F, f, {x}));
    }
  }
}

TEST(Lambda, Examples) {
  const auto a = generic_root(swap3(), 1);
  ASSERT_TRUE(a.has_value());
  const std::vector<int> zero{0, 0};
  const std::vector<int> ones{1, 1};
  EXPECT_EQ(lambda_eval(*a, zero), a->ext.one());
  EXPECT_EQ(lambda_eval(*a, ones), a->ext.one());  // theta^(1 + 3) = theta^4 = 1
  const auto b = generic_root(golden(), 3);
  ASSERT_TRUE(b.has_value());
  const std::vector<int> e0{1, 0, 0};
  EXPECT_EQ(lambda_eval(*b, e0), b->theta);
  const std::vector<int> bad{1, 0};
  try {
    (void)lambda_eval(*b, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Lambda, EvaluatorAgreesWithDirectPowers) {
  const auto root = generic_root(golden(), 3);
  ASSERT_TRUE(root.has_value());
  const ExtensionField& E = root->ext;
  const LambdaEvaluator lambda(*root, 3, 3);
  for (const auto& u : collect_istm({3, 3, 3, 0})) {
    EXPECT_EQ(lambda(u), lambda_eval(*root, u));
    // Direct exponent: sum u_j q^(jr) reduced mod the group order.
    __int128 e = 0;
    __int128 w = 1;
    for (int uj : u) {
      e += uj * w;
      w *= 8;
    }
    e %= 511;
    if (e < 0) e += 511;
    EXPECT_EQ(lambda(u), E.pow(root->theta, static_cast<u128>(e)));
    std::vector<int> neg(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) neg[j] = -u[j];
    EXPECT_EQ(E.mul(lambda(u), lambda(neg)), E.one());
  }
}

TEST(Injectivity, Examples) {
  const auto b = generic_root(golden(), 3);
  ASSERT_TRUE(b.has_value());
  const auto ok = verify_lambda_injective(*b, {3, 2, 2, 1});
  EXPECT_TRUE(ok.injective);
  EXPECT_EQ(ok.evaluated, 19u);

  const auto a = generic_root(swap3(), 1);
  ASSERT_TRUE(a.has_value());
  const auto bad = verify_lambda_injective(*a, {2, 1, 1, 0});
  EXPECT_FALSE(bad.injective);
  EXPECT_EQ(lambda_eval(*a, bad.first), lambda_eval(*a, bad.second));
  EXPECT_NE(bad.first, bad.second);

  EXPECT_TRUE(verify_lambda_injective(*a, {2, 0, 0, 0}).injective);
  EXPECT_THROW((void)verify_lambda_injective(*a, {3, 0, 0, 0}), Error);
  EXPECT_THROW((void)verify_lambda_injective(*b, {3, 30, 30, 0}, 1000), Error);
}

TEST(CertifiedBound, Examples) {
  EXPECT_EQ(certified_order_bound(golden(), 3).count, 19);
  const Field F5 = Field::prime(5);
  const Mat2 tri = make_mat2(F5, {1}, {0}, {0}, {4});  // D = 2
  const auto c = certified_order_bound(tri, 3);
  EXPECT_EQ(c.count, count_istm({2, 3, 2, 0}));
  EXPECT_TRUE(c.boundary);
  EXPECT_EQ(certified_order_bound(swap3(), 1).count, 1);
}

TEST(OrderOfShift, Examples) {
  const auto a = generic_root(swap3(), 1);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(order_of_shift(*a, {0}) == 4);
  EXPECT_TRUE(order_of_shift(*a, {1}) == 8);
  const auto b = generic_root(golden(), 3);
  ASSERT_TRUE(b.has_value());
  const u128 ord = order_of_shift(*b, {0});
  EXPECT_TRUE(ord == 73 || ord == 511);
  auto mul = [&](const Poly& x, const Poly& y) { return b->ext.mul(x, y); };
  EXPECT_TRUE(ord == oracle::naive_order(b->theta, b->ext.one(), mul));
  const Poly t1 = b->ext.add(b->theta, b->ext.one());
  EXPECT_TRUE(order_of_shift(*b, {1}) == oracle::naive_order(t1, b->ext.one(), mul));
}

TEST(Alpha, ParseAndSelect) {
  const Field F5 = Field::prime(5);
  EXPECT_EQ(parse_alpha_spec(F5, "all").policy, AlphaPolicy::All);
  EXPECT_EQ(parse_alpha_spec(F5, "default").policy, AlphaPolicy::Default);
  EXPECT_EQ(parse_alpha_spec(F5, "sample:3").sample, 3u);
  const auto list = parse_alpha_spec(F5, "list:4;1;4");
  EXPECT_EQ(select_alphas(F5, list, 0), (std::vector<Elem>{{1}, {4}}));
  EXPECT_EQ(format_alpha_spec(list), "list:4;1;4");
  EXPECT_THROW((void)parse_alpha_spec(F5, "some"), Error);
  EXPECT_THROW((void)parse_alpha_spec(F5, "sample:x"), Error);
  EXPECT_THROW((void)parse_alpha_spec(F5, "list:7"), Error);
  EXPECT_EQ(select_alphas(F5, {}, 0).size(), 5u);

  const Field F83 = Field::prime(83);
  const auto picked = select_alphas(F83, {}, 5);
  EXPECT_EQ(picked.size(), 16u);
  EXPECT_TRUE(std::is_sorted(picked.begin(), picked.end()));
  EXPECT_EQ(std::set<Elem>(picked.begin(), picked.end()).size(), 16u);
  EXPECT_EQ(select_alphas(F83, {}, 5), picked);
  EXPECT_EQ(select_alphas(Field::make(3, 4), {}, 0).size(), 81u);
}

TEST(Experiment, GoldenMatrixR3) {
  const auto records = run_experiment({golden(), {3}, parse_alpha_spec(F2, "all"), 0, {}});
  ASSERT_EQ(records.size(), 2u);
  for (const auto& rec : records) {
    EXPECT_TRUE(rec.applicable);
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(*rec.certified_bound, 19);
    EXPECT_TRUE(rec.injectivity_checked);
    EXPECT_TRUE(*rec.injective);
    EXPECT_EQ(rec.paper_bound_label, "bound (2)");
    EXPECT_GE(BigInt(*rec.order), ceil_up(*rec.paper_bound));
  }
  EXPECT_EQ(records[0].alpha.v, 0u);
  EXPECT_EQ(records[1].alpha.v, 1u);
  EXPECT_TRUE(summarize(records).ok());
}

TEST(Experiment, SwapMatrixR1) {
  const auto records = run_experiment({swap3(), {1}, {}, 0, {}});
  ASSERT_EQ(records.size(), 3u);
  // alpha = 0 keeps the dependent class (s = t = 0); alpha = 1, 2 give an
  // upper triangular B, where s = 1, t = 0.
  for (const auto& rec : records) {
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(*rec.certified_bound, rec.alpha.v == 0 ? 1 : 3);
    EXPECT_EQ(rec.case_B.kind, rec.alpha.v == 0 ? CaseKind::Dependent : CaseKind::Triangular);
    EXPECT_FALSE(rec.paper_bound.has_value());
  }
}

TEST(Experiment, NoGenericRootIsNotApplicable) {
  const auto records = run_experiment({golden(), {2, 3}, {}, 0, {}});
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].r, 2u);
  EXPECT_FALSE(records[0].applicable);
  EXPECT_FALSE(records[0].order.has_value());
  EXPECT_FALSE(records[0].certified_bound.has_value());
  EXPECT_EQ(record_json(records[0])["pass"], "not-applicable");
  EXPECT_TRUE(records[2].applicable);
  const auto s = summarize(records);
  EXPECT_EQ(s.applicable, 2u);
  EXPECT_TRUE(s.ok());
}

TEST(Experiment, RecordsBothClassifications) {
  // Upper triangular [[1,1],[0,2]] over F_3; shifting by 2 makes the
  // lower-left entry nonzero.
  const Mat2 A = make_mat2(F3, {1}, {1}, {0}, {2});
  const auto records = run_experiment({A, {2}, parse_alpha_spec(F3, "all"), 0, {}});
  bool changed = false;
  for (const auto& rec : records) {
    EXPECT_EQ(rec.case_A.kind, CaseKind::Triangular);
    changed = changed || rec.case_B.kind != CaseKind::Triangular;
    if (rec.applicable) {
      EXPECT_TRUE(rec.pass);
    }
  }
  EXPECT_TRUE(changed);
}

TEST(Experiment, Errors) {
  try {
    (void)run_experiment({make_mat2(F3, {1}, {0}, {0}, {1}), {2}, {}, 0, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdentityClass);
  }
  EXPECT_THROW((void)run_experiment({golden(), {0}, {}, 0, {}}), Error);
  EXPECT_THROW((void)run_experiment({golden(), {}, {}, 0, {}}), Error);
}

// Diagonal classes are classified as triangular, but Lambda collides on them:
// theta^(q^r) = lambda theta gives Lambda(2, 0) = theta^2 = Lambda(0, 2) when
// lambda^2 = 1.
TEST(Experiment, DiagonalClassDefeatsTheTriangularCertificate) {
  const Mat2 diag = make_mat2(F3, {1}, {0}, {0}, {2});
  EXPECT_EQ(classify(diag).kind, CaseKind::Triangular);
  const auto root = generic_root(diag, 2);
  ASSERT_TRUE(root.has_value());
  const std::vector<int> u{2, 0};
  const std::vector<int> v{0, 2};
  EXPECT_EQ(lambda_eval(*root, u), lambda_eval(*root, v));
  EXPECT_FALSE(verify_lambda_injective(*root, certified_order_bound(diag, 2).params).injective);

  // [[1,0],[1,2]] shifted by 2 is diagonal; the first degree-8 factor of
  // F_{A,4} gives ord(theta + 2) = 32 against a certified 48.
  const Mat2 A = make_mat2(F3, {1}, {0}, {1}, {2});
  const Mat2 B = shift_conjugate(A, {2});
  EXPECT_TRUE(B.b == F3.zero() && B.c == F3.zero());
  const auto records = run_experiment({A, {4}, parse_alpha_spec(F3, "list:2"), 0, {}});
  ASSERT_EQ(records.size(), 1u);
  const auto& rec = records[0];
  ASSERT_TRUE(rec.applicable);
  EXPECT_EQ(*rec.certified_bound, 48);
  EXPECT_TRUE(*rec.order == 32);
  EXPECT_FALSE(rec.pass);
  EXPECT_EQ(summarize(records).order_violations, 1u);
}

TEST(Experiment, DeterministicOutput) {
  const Field F5 = Field::prime(5);
  const ExperimentConfig cfg{make_mat2(F5, {1}, {2}, {3}, {2}), {1, 2, 3}, {}, 17, {}};
  EXPECT_EQ(experiment_jsonl(run_experiment(cfg)), experiment_jsonl(run_experiment(cfg)));
}

}  // namespace
}  // namespace fforder
