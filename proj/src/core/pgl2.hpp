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

#include "field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fforder {

/// Invertible 2x2 matrix, rows (a, b) and (c, d).
struct Mat2 {
  Field field;
  Elem a, b, c, d;
};

/// Throws PreconditionFailed when ad - bc = 0.
Mat2 make_mat2(const Field& F, Elem a, Elem b, Elem c, Elem d);
Mat2 identity_mat2(const Field& F);
Elem det(const Mat2& A);
Mat2 mul(const Mat2& A, const Mat2& B);
Mat2 power(const Mat2& A, std::uint64_t n);
bool is_scalar(const Mat2& A);
/// [A] = [B] in PGL_2.
bool same_class(const Mat2& A, const Mat2& B);

/// Rows of A^n: top (a_n, b_n), bottom (c_n, d_n).
struct RowPair {
  std::uint64_t n = 0;
  std::array<Elem, 2> top;
  std::array<Elem, 2> bottom;
};

RowPair power_rows(const Mat2& A, std::uint64_t n);

/// Least D >= 1 with A^D scalar. Throws IdentityClass for scalar A.
std::uint64_t pgl_order(const Mat2& A);

enum class CaseKind { Triangular, IndependentRows, Dependent };

const char* case_name(CaseKind kind) noexcept;

struct CaseTag {
  CaseKind kind = CaseKind::IndependentRows;
  std::uint64_t D = 0;
  std::uint64_t g = 0;  // Dependent only: least 0 < g < D with d_g = 0
  std::uint64_t m = 0;  // zero coordinates of the index set; gcd(g, D) when Dependent
  bool transposed = false;  // upper triangular input swapped to [[d,c],[b,a]]
};

/// Throws IdentityClass.
CaseTag classify(const Mat2& A);

/// [[a + b al, b], [c + d al - a al - b al^2, d - b al]]: theta + al is a root
/// of F_{B,r} exactly when theta is a root of F_{A,r}.
Mat2 shift_conjugate(const Mat2& A, Elem alpha);

struct LemmaReport {
  std::uint64_t matrices = 0;
  std::uint64_t scalar_skipped = 0;
  std::uint64_t li1_checked = 0;  // det-normalized, bc != 0: rows of A^n pairwise independent
  std::uint64_t li2_checked = 0;  // detected (c_n,d_n) = gamma (a_k,b_k) instances
  std::uint64_t li3_checked = 0;  // lower triangular, c != 0: bottom rows independent
  std::uint64_t order_remark_checked = 0;  // triangular order is ord(a/d) or p
  std::uint64_t violations = 0;
  std::vector<std::string> details;
};

/// Brute-force check of the row-independence lemmas over GL_2(F_q).
/// Exhaustive when sample_budget is 0 (requires q <= 9, else BudgetExceeded);
/// otherwise checks sample_budget random invertible matrices.
LemmaReport verify_li_lemmas(const Field& F, std::uint64_t sample_budget = 0,
                             std::uint64_t seed = 0);

/// M^-1 diag(beta, beta^-1) M with M = [[1, 1], [al, al^-1]], beta a primitive
/// 2 rho n-th root of unity and al = beta^n. Its class has order rho n and its
/// dependency index g satisfies gcd(g, D) = D / rho.
/// Throws NoPrimitiveRoot when 2 rho n does not divide q - 1, and
/// PreconditionFailed when rho is not the least prime factor of rho n.
Mat2 sharpness_example(std::uint64_t rho, std::uint64_t n, const Field& F);

/// One representative per non-identity class of PGL_2(F_q), scaled so the
/// first nonzero entry of (a, b, c, d) is 1, in lexicographic order.
std::vector<Mat2> class_representatives(const Field& F);

/// "a,b,c,d" with element codes.
Mat2 parse_mat2(const Field& F, std::string_view text);
std::string format_mat2(const Mat2& A);

}  // namespace fforder
