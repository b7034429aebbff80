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

/**
 * @file highorder.hpp
 * @brief Generic roots of F_{A,r}, the map Lambda, and experiments comparing
 * ord(theta + alpha) with the certified lower bound.
 */

#include "action.hpp"
#include "extension.hpp"
#include "istm.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fforder {

/// A root theta of F_{A,r} of degree D r over F_q, realized as the class of X
/// in F_q[X]/(factor).
struct GenericRoot {
  Mat2 A;
  unsigned r = 0;
  std::uint64_t D = 0;
  Poly factor;
  ExtensionField ext;
  Poly theta;
  IntFactorization group;  // q^(Dr) - 1
};

/// Builds F_{A,r}, factors it and takes the first factor of degree D r in
/// factor order. std::nullopt when there is none.
/// Throws DegreeCap, OrderWidth, IdentityClass.
std::optional<GenericRoot> generic_root(const Mat2& A, unsigned r, const Caps& caps = {},
                                        std::uint64_t seed = 0);

/// Same choice, reusing a census already computed for (A, r).
std::optional<GenericRoot> generic_root(const DegreeCensus& census, const Caps& caps = {});

/// theta + alpha as a generic root of F_{B,r} with B = shift_conjugate(A, alpha).
GenericRoot shift_root(const GenericRoot& root, Elem alpha);

/// f(X - alpha).
Poly taylor_shift(const Field& F, const Poly& f, Elem alpha);

/// prod_j theta^(u_j q^(jr)). Throws LengthMismatch when u.size() != D.
Poly lambda_eval(const GenericRoot& root, std::span<const int> u);

/// theta^(q^(jr)) == A^j o theta for 0 <= j < D, both sides computed
/// independently.
bool frobenius_matches_action(const GenericRoot& root);

/// Lambda on I_{s,t,m} with the powers theta^(e q^(jr)), -t <= e <= s,
/// tabulated once.
class LambdaEvaluator {
 public:
  LambdaEvaluator(const GenericRoot& root, unsigned s, unsigned t);
  [[nodiscard]] Poly operator()(std::span<const int> u) const;

 private:
  const GenericRoot* root_;
  unsigned t_;
  std::vector<std::vector<Poly>> table_;  // [j][e + t]
};

struct InjectivityResult {
  bool injective = true;
  std::uint64_t evaluated = 0;
  std::vector<int> first;  // a colliding pair when not injective
  std::vector<int> second;
};

/// Evaluates Lambda on every member of I_{s,t,m}. Throws EnumerationCap above
/// cap and LengthMismatch when params.D != root.D.
InjectivityResult verify_lambda_injective(const GenericRoot& root, const IstmParams& params,
                                          std::uint64_t cap = 1'000'000);

struct CertifiedBound {
  BigInt count;
  IstmParams params;
  bool boundary = false;
};

CertifiedBound certified_order_bound(const CaseTag& tag, unsigned r);
/// Throws IdentityClass.
CertifiedBound certified_order_bound(const Mat2& A, unsigned r);

/// Multiplicative order of theta + alpha.
u128 order_of_shift(const GenericRoot& root, Elem alpha);

enum class AlphaPolicy { Default, All, Sample, List };

struct AlphaSpec {
  AlphaPolicy policy = AlphaPolicy::Default;
  std::uint64_t sample = 16;
  std::vector<Elem> values;
};

/// "default", "all", "sample:n" or "list:a;b;..." (element codes). Throws Parse.
AlphaSpec parse_alpha_spec(const Field& F, std::string_view text);
std::string format_alpha_spec(const AlphaSpec& spec);

/// Sorted distinct shifts. Default is all of F_q for q <= 81, else a seeded
/// sample of 16.
std::vector<Elem> select_alphas(const Field& F, const AlphaSpec& spec, std::uint64_t seed);

struct ExperimentConfig {
  Mat2 A;
  std::vector<unsigned> r_values;
  AlphaSpec alpha;
  std::uint64_t seed = 0;
  Caps caps;
};

struct ExperimentRecord {
  std::uint64_t q = 0;
  std::string field;  // "p^k"
  Mat2 A;
  Mat2 B;  // shift_conjugate(A, alpha)
  unsigned r = 0;
  std::uint64_t D = 0;
  CaseTag case_A{};
  CaseTag case_B{};
  std::map<std::uint64_t, std::uint64_t> factor_degrees{};
  bool degree_menu_ok = true;
  std::optional<Poly> chosen_factor{};
  Elem alpha{};
  bool applicable = false;  // a generic root exists
  std::optional<u128> order{};
  std::optional<BigInt> certified_bound{};
  std::optional<IstmParams> params{};
  bool boundary = false;
  std::optional<Real> paper_bound{};  // r > 2
  std::string paper_bound_label{};
  bool injectivity_checked = false;
  std::optional<bool> injective{};
  bool pass = false;
};

/// One record per (r, alpha), ordered by r then alpha. Throws IdentityClass,
/// PreconditionFailed (r = 0) and the cap errors.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

struct ExperimentSummary {
  std::uint64_t records = 0;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::uint64_t order_violations = 0;
  std::uint64_t injectivity_failures = 0;
  std::uint64_t structure_violations = 0;

  [[nodiscard]] bool ok() const noexcept {
    return order_violations == 0 && injectivity_failures == 0 && structure_violations == 0;
  }
};

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records);

}  // namespace fforder
