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
 * @file istm.hpp
 * @brief Counting the exponent sets I_{s,t,m} and the real-valued lower bounds
 * built on them.
 *
 * I_{s,t,m} is the set of u in Z^D whose positive entries sum to at most s,
 * whose negative entries sum to at least -t, and whose first m entries vanish.
 * Exact counts are BigInt; the closed-form bounds are Real and are compared
 * with counts through certainly_below(), which rounds the real value up first.
 */

#include "common.hpp"
#include "pgl2.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fforder {

struct IstmParams {
  unsigned D = 1;
  unsigned s = 0;
  unsigned t = 0;
  unsigned m = 0;

  friend bool operator==(const IstmParams&, const IstmParams&) = default;
};

/// Throws PreconditionFailed unless D >= 1 and m < D.
void validate(const IstmParams& params);

/// C(n, k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// sum_{i=0}^{R} C(R, i) C(s, i) C(R - i + t, t) with R = D - m.
BigInt count_istm(const IstmParams& params);

/// Visits every member exactly once in lexicographic order. Throws
/// EnumerationCap when |I_{s,t,m}| exceeds cap.
void enumerate_istm(const IstmParams& params, std::uint64_t cap,
                    const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> collect_istm(const IstmParams& params, std::uint64_t cap = 1'000'000);

/// Lower bound for |I_{t,t,m}| when 2t >= D - m: C(R/2 + t, R) C(2R, R) with
/// R = D - m; for odd R the top is split into the floor/ceil average
/// floor((C(floor(R/2)+t, R) + C(ceil(R/2)+t, R)) C(2R, R) / 2).
/// Throws PreconditionFailed when 2t < D - m.
BigInt binom_floor(unsigned D, unsigned t, unsigned m);

enum class BoundItem { A, B, C };

const char* item_name(BoundItem item) noexcept;

/// The parameters each closed form bounds: a: (floor(Dr/2), floor(Dr/2), 0),
/// b: (floor(Dr/4), floor(Dr/4), 0), c: (floor(Dr/4), floor(Dr/4), floor(D/2)).
IstmParams item_params(BoundItem item, unsigned D, unsigned r);

/// Closed-form lower bound for |I| at item_params(item, D, r).
/// Throws PreconditionFailed unless D >= 2 and r >= 3.
Real closed_form_bound(BoundItem item, unsigned D, unsigned r);

/// Independent rows -> item b, dependent -> item c, triangular -> item a.
/// Throws RTooSmall for r <= 2.
Real main_theorem_bound(const CaseTag& tag, unsigned r);

BoundItem item_for_case(CaseKind kind) noexcept;

/// which = 1: (1/(sqrt2 pi D)) ((e - eps)(r + 2))^D;
/// which = 2: (sqrt2/(pi D)) (2 (e - eps)(r + 1))^(D/2). Zero when eps >= e.
Real asymptotic_floor(int which, unsigned D, unsigned r, const Real& eps);

/// True when value < count holds with the value rounded up by a relative
/// 10^-40, far above the working precision's error.
bool certainly_below(const Real& value, const BigInt& count);

/// ceil of value rounded up as in certainly_below.
BigInt ceil_up(const Real& value);

/// 12 significant digits.
std::string format_real(const Real& value);

struct BoundReport {
  CaseTag tag;
  unsigned r = 0;
  IstmParams params;            // certified parameters
  bool boundary = false;        // t was decremented to keep s + t strictly below the limit
  BigInt exact_count;           // |I| at params
  IstmParams item_params;       // parameters named by the closed form
  BigInt item_count;            // |I| at item_params
  std::optional<BigInt> binom_floor;  // when 2t >= D - m at params
  std::optional<Real> closed_form;    // r >= 3
  std::optional<Real> main_theorem;   // r >= 3
};

/// The case-appropriate s = t and m: triangular s + t < Dr with m = 0,
/// otherwise s + t < Dr/2 with m = 0 (independent rows) or gcd(g, D)
/// (dependent). s = t starts at floor(Dr/2) or floor(Dr/4) and t is reduced
/// by one when the pair sits on the limit.
struct CertifiedParams {
  IstmParams params;
  bool boundary = false;
};
CertifiedParams certified_params(const CaseTag& tag, unsigned r);

BoundReport bound_report(const CaseTag& tag, unsigned r);

struct PropositionReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> details;
};

/// closed_form_bound(item, D, r) < |I| at item_params(item, D, r) for every
/// item and 2 <= D <= D_max, 3 <= r <= r_max.
PropositionReport verify_proposition(unsigned D_max, unsigned r_max);

}  // namespace fforder
