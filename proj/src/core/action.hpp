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

#include "extension.hpp"
#include "pgl2.hpp"
#include "poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace fforder {

/// b X^(q^r + 1) - a X^(q^r) + d X - c. Throws DegreeCap.
Poly build_FAr(const Mat2& A, unsigned r, const Caps& caps = {});

/// Degree of F_{A,r} without building it: q^r + 1 if b != 0, else q^r.
/// Throws DegreeCap when q^r + 1 exceeds the cap.
std::uint64_t FAr_degree(const Mat2& A, unsigned r, const Caps& caps = {});

/// [A] o f: the monic normalization of (bX + d)^n f((aX + c)/(bX + d)),
/// expanded as sum f_i (aX + c)^i (bX + d)^(n - i).
/// Throws DegreeTooSmall (deg f < 2), NotIrreducible.
Poly act_poly(const Mat2& A, const Poly& f);

/// A o theta = (d theta - c)/(-b theta + a) in E. Throws BaseFieldElement when
/// theta lies in F_q.
Poly act_element(const Mat2& A, const ExtensionField& E, const Poly& theta);

/// [A] o f == f.
bool invariance_check(const Mat2& A, const Poly& f);

/// Degrees an irreducible factor of F_{A,r} may have: at most 2, or D k with
/// k | r and gcd(r / k, D) = 1.
bool degree_allowed(std::uint64_t degree, std::uint64_t D, unsigned r);

struct DegreeCensus {
  Mat2 A;
  unsigned r = 0;
  std::uint64_t D = 0;
  std::uint64_t total_degree = 0;
  std::map<std::uint64_t, std::uint64_t> degrees{};         // distinct factors per degree
  std::map<std::uint64_t, std::uint64_t> multiplicities{};  // summed multiplicity per degree
  std::uint64_t N_Dr = 0;
  PolyFactorization factorization{};
  std::vector<std::string> violations{};  // factor degrees outside the allowed menu
};

/// Factors F_{A,r} and records the degree census; degree-menu violations are
/// collected, not thrown.
DegreeCensus compute_census(const Mat2& A, unsigned r, const Caps& caps = {},
                            std::uint64_t seed = 0);

/// As compute_census, but throws StructureViolation on any violation.
DegreeCensus factor_census(const Mat2& A, unsigned r, const Caps& caps = {},
                           std::uint64_t seed = 0);

struct CensusCheck {
  DegreeCensus census;
  std::uint64_t invariance_checked = 0;
  std::vector<std::string> invariance_failures{};

  [[nodiscard]] std::uint64_t violations() const noexcept {
    return census.violations.size() + invariance_failures.size();
  }
};

/// compute_census plus invariance_check on every factor of degree >= 2.
CensusCheck verify_census(const Mat2& A, unsigned r, const Caps& caps = {}, std::uint64_t seed = 0);

}  // namespace fforder
