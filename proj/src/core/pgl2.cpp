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

#include "pgl2.hpp"

#include "extension.hpp"
#include "intfactor.hpp"
#include "poly.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace fforder {

Mat2 make_mat2(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  Mat2 A{F, a, b, c, d};
  if (det(A).v == 0) throw Error(ErrorCode::PreconditionFailed, "singular matrix");
  return A;
}

Mat2 identity_mat2(const Field& F) { return Mat2{F, F.one(), F.zero(), F.zero(), F.one()}; }

Elem det(const Mat2& A) {
  const Field& F = A.field;
  return F.sub(F.mul(A.a, A.d), F.mul(A.b, A.c));
}

Mat2 mul(const Mat2& A, const Mat2& B) {
  const Field& F = A.field;
  return Mat2{F,
              F.add(F.mul(A.a, B.a), F.mul(A.b, B.c)),
              F.add(F.mul(A.a, B.b), F.mul(A.b, B.d)),
              F.add(F.mul(A.c, B.a), F.mul(A.d, B.c)),
              F.add(F.mul(A.c, B.b), F.mul(A.d, B.d))};
}

Mat2 power(const Mat2& A, std::uint64_t n) {
  Mat2 result = identity_mat2(A.field);
  Mat2 base = A;
  while (n != 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n != 0) base = mul(base, base);
  }
  return result;
}

bool is_scalar(const Mat2& A) { return A.b.v == 0 && A.c.v == 0 && A.a == A.d; }

bool same_class(const Mat2& A, const Mat2& B) {
  // Proportional as vectors in F_q^4.
  const Field& F = A.field;
  const std::array<Elem, 4> x{A.a, A.b, A.c, A.d};
  const std::array<Elem, 4> y{B.a, B.b, B.c, B.d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (F.mul(x[i], y[j]) != F.mul(x[j], y[i])) return false;
    }
  }
  return true;
}

RowPair power_rows(const Mat2& A, std::uint64_t n) {
  const Mat2 P = power(A, n);
  return RowPair{n, {P.a, P.b}, {P.c, P.d}};
}

std::uint64_t pgl_order(const Mat2& A) {
  if (is_scalar(A)) throw Error(ErrorCode::IdentityClass, "identity class excluded");
  // Element orders in PGL_2(F_q) never exceed q + 1.
  const std::uint64_t limit = A.field.q() + 1;
  Mat2 P = A;
  for (std::uint64_t D = 1; D <= limit; ++D) {
    if (is_scalar(P)) return D;
    P = mul(P, A);
  }
  throw Error(ErrorCode::StructureViolation, "projective order exceeds q + 1");
}

const char* case_name(CaseKind kind) noexcept {
  switch (kind) {
    case CaseKind::Triangular: return "triangular";
    case CaseKind::IndependentRows: return "independent-rows";
    case CaseKind::Dependent: return "dependent";
  }
  return "unknown";
}

CaseTag classify(const Mat2& A) {
  CaseTag tag;
  tag.D = pgl_order(A);
  if (A.b.v == 0 || A.c.v == 0) {
    tag.kind = CaseKind::Triangular;
    tag.transposed = A.b.v != 0;
    return tag;
  }
  for (std::uint64_t g = 1; g < tag.D; ++g) {
    if (power_rows(A, g).bottom[1].v == 0) {
      tag.kind = CaseKind::Dependent;
      tag.g = g;
      tag.m = std::gcd(g, tag.D);
      return tag;
    }
  }
  tag.kind = CaseKind::IndependentRows;
  return tag;
}

Mat2 shift_conjugate(const Mat2& A, Elem alpha) {
  const Field& F = A.field;
  const Elem ba = F.mul(A.b, alpha);
  const Elem lower_left =
      F.sub(F.sub(F.add(A.c, F.mul(A.d, alpha)), F.mul(A.a, alpha)), F.mul(ba, alpha));
  return Mat2{F, F.add(A.a, ba), A.b, lower_left, F.sub(A.d, ba)};
}

namespace {

// 2x2 matrix over an extension, used for the det-1 normalization.
struct ExtMat {
  Poly a, b, c, d;
};

ExtMat ext_mul(const ExtensionField& E, const ExtMat& X, const ExtMat& Y) {
  return ExtMat{E.add(E.mul(X.a, Y.a), E.mul(X.b, Y.c)), E.add(E.mul(X.a, Y.b), E.mul(X.b, Y.d)),
                E.add(E.mul(X.c, Y.a), E.mul(X.d, Y.c)), E.add(E.mul(X.c, Y.b), E.mul(X.d, Y.d))};
}

bool ext_dependent(const ExtensionField& E, const Poly& x0, const Poly& x1, const Poly& y0,
                   const Poly& y1) {
  return E.sub(E.mul(x0, y1), E.mul(x1, y0)).is_zero();
}

// Square root of d in F_q via the roots of Y^2 - d; nullopt if d is a non-square.
std::optional<Elem> field_sqrt(const Field& F, Elem d) {
  if (F.p() == 2) return F.pow(d, F.q() / 2);
  if (d.v == 0) return F.zero();
  const Poly y2 = Poly({F.neg(d), F.zero(), F.one()});
  for (const auto& [g, mult] : poly::factor(F, y2).factors) {
    if (g.degree() == 1) return F.neg(g.c[0]);
  }
  return std::nullopt;
}

struct Normalized {
  ExtensionField E;
  ExtMat A;
};

// delta^-1 A with delta^2 = det A, over F_q[Y]/(Y^2 - det) when det is a
// non-square and over F_q[Y]/(fixed quadratic) otherwise.
Normalized det_one_normalize(const Mat2& A, const Poly& fixed_quadratic) {
  const Field& F = A.field;
  const Elem dt = det(A);
  const auto root = field_sqrt(F, dt);
  if (root) {
    ExtensionField E(F, fixed_quadratic);
    const Elem s = F.inv(*root);
    return {E, ExtMat{E.from_base(F.mul(s, A.a)), E.from_base(F.mul(s, A.b)),
                      E.from_base(F.mul(s, A.c)), E.from_base(F.mul(s, A.d))}};
  }
  ExtensionField E(F, Poly({F.neg(dt), F.zero(), F.one()}));
  const Poly s = E.inv(E.generator());
  return {E, ExtMat{E.scale(s, A.a), E.scale(s, A.b), E.scale(s, A.c), E.scale(s, A.d)}};
}

void record(LemmaReport& report, const Mat2& A, const std::string& what) {
  ++report.violations;
  if (report.details.size() < 50) report.details.push_back(what + " for A = " + format_mat2(A));
}

void check_matrix(const Mat2& A, const Poly& fixed_quadratic, LemmaReport& report) {
  const Field& F = A.field;
  ++report.matrices;
  if (is_scalar(A)) {
    ++report.scalar_skipped;
    return;
  }
  const std::uint64_t D = pgl_order(A);

  // Triangular orders: ord(a/d) when a != d, else p.
  if (A.b.v == 0 || A.c.v == 0) {
    ++report.order_remark_checked;
    const std::uint64_t expected =
        A.a != A.d ? static_cast<std::uint64_t>(element_order(F, F.div(A.a, A.d))) : F.p();
    if (expected != D) record(report, A, "triangular order remark");
  }

  std::vector<RowPair> rows;
  rows.reserve(D);
  for (std::uint64_t n = 0; n < D; ++n) rows.push_back(power_rows(A, n));

  // Lower triangular with c != 0: bottom rows pairwise independent.
  if (A.b.v == 0 && A.c.v != 0) {
    ++report.li3_checked;
    for (std::uint64_t n = 0; n < D; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto& x = rows[n].bottom;
        const auto& y = rows[k].bottom;
        if (F.mul(x[0], y[1]) == F.mul(x[1], y[0])) record(report, A, "LI-3 dependence");
      }
    }
  }

  const Normalized N = det_one_normalize(A, fixed_quadratic);
  const ExtensionField& E = N.E;
  {
    const Poly dn = E.sub(E.mul(N.A.a, N.A.d), E.mul(N.A.b, N.A.c));
    if (dn != E.one()) record(report, A, "det-1 normalization");
  }
  std::vector<ExtMat> powers;
  powers.reserve(D);
  powers.push_back(ExtMat{E.one(), E.zero(), E.zero(), E.one()});
  for (std::uint64_t n = 1; n < D; ++n) powers.push_back(ext_mul(E, powers.back(), N.A));

  if (!N.A.b.is_zero() && !N.A.c.is_zero()) {
    ++report.li1_checked;
    for (std::uint64_t n = 0; n < D; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto& P = powers[n];
        const auto& Q = powers[k];
        if (ext_dependent(E, P.a, P.b, Q.a, Q.b)) record(report, A, "LI-1 top rows dependent");
        if (ext_dependent(E, P.c, P.d, Q.c, Q.d)) record(report, A, "LI-1 bottom rows dependent");
      }
    }
  }

  // (c_n, d_n) = gamma (a_k, b_k) forces (c_i, d_i) = +-gamma (a_{i-g}, b_{i-g}).
  for (std::uint64_t n = 0; n < D; ++n) {
    for (std::uint64_t k = 0; k < D; ++k) {
      const auto& Pn = powers[n];
      const auto& Pk = powers[k];
      if (!ext_dependent(E, Pn.c, Pn.d, Pk.a, Pk.b)) continue;
      ++report.li2_checked;
      if (n == k) {
        record(report, A, "LI-2 with k = n");
        continue;
      }
      const Poly gamma = !Pk.a.is_zero() ? E.div(Pn.c, Pk.a) : E.div(Pn.d, Pk.b);
      const std::uint64_t g = (n + D - k) % D;
      for (std::uint64_t i = 0; i < D; ++i) {
        const auto& Pi = powers[i];
        const auto& Pj = powers[(i + D - g) % D];
        const Poly ec = E.mul(gamma, Pj.a);
        const Poly ed = E.mul(gamma, Pj.b);
        const bool plus = Pi.c == ec && Pi.d == ed;
        const bool minus = Pi.c == E.neg(ec) && Pi.d == E.neg(ed);
        if (!plus && !minus) record(report, A, "LI-2 propagation");
      }
    }
  }
}

}  // namespace

LemmaReport verify_li_lemmas(const Field& F, std::uint64_t sample_budget, std::uint64_t seed) {
  const std::uint64_t q = F.q();
  if (sample_budget == 0 && q > 9) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive lemma check needs q <= 9; pass a sample budget");
  }
  const Poly fixed_quadratic = poly::find_irreducible(F, 2);
  LemmaReport report;
  if (sample_budget == 0) {
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t c = 0; c < q; ++c) {
          for (std::uint64_t d = 0; d < q; ++d) {
            const Mat2 A{F, {a}, {b}, {c}, {d}};
            if (det(A).v == 0) continue;
            check_matrix(A, fixed_quadratic, report);
          }
        }
      }
    }
    return report;
  }
  std::mt19937_64 rng(seed);
  while (report.matrices < sample_budget) {
    const Mat2 A{F, {rng() % q}, {rng() % q}, {rng() % q}, {rng() % q}};
    if (det(A).v == 0) continue;
    check_matrix(A, fixed_quadratic, report);
  }
  return report;
}

Mat2 sharpness_example(std::uint64_t rho, std::uint64_t n, const Field& F) {
  if (!is_prime(rho) || n == 0) {
    throw Error(ErrorCode::PreconditionFailed, "rho must be prime and n positive");
  }
  for (const auto& [prime, mult] : factor_integer(n).factors) {
    if (prime < rho) {
      throw Error(ErrorCode::PreconditionFailed, "rho is not the least prime factor of rho n");
    }
  }
  const std::uint64_t root_order = 2 * rho * n;
  if ((F.q() - 1) % root_order != 0) {
    throw Error(ErrorCode::NoPrimitiveRoot,
                "no primitive " + std::to_string(root_order) + "-th root of unity in F_" +
                    std::to_string(F.q()));
  }
  const Elem beta = F.pow(F.primitive_element(), (F.q() - 1) / root_order);
  const Elem al = F.pow(beta, n);
  const Mat2 M = make_mat2(F, F.one(), F.one(), al, F.inv(al));
  const Elem s = F.inv(det(M));
  const Mat2 M_inv{F, F.mul(s, M.d), F.mul(s, F.neg(M.b)), F.mul(s, F.neg(M.c)), F.mul(s, M.a)};
  const Mat2 diag{F, beta, F.zero(), F.zero(), F.inv(beta)};
  return mul(mul(M_inv, diag), M);
}

std::vector<Mat2> class_representatives(const Field& F) {
  const std::uint64_t q = F.q();
  std::set<std::array<std::uint64_t, 4>> seen;
  std::vector<Mat2> out;
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t c = 0; c < q; ++c) {
        for (std::uint64_t d = 0; d < q; ++d) {
          const Mat2 A{F, {a}, {b}, {c}, {d}};
          if (det(A).v == 0 || is_scalar(A)) continue;
          const std::array<Elem, 4> entries{A.a, A.b, A.c, A.d};
          Elem lead{};
          for (const Elem e : entries) {
            if (e.v != 0) {
              lead = e;
              break;
            }
          }
          const Elem s = F.inv(lead);
          const std::array<std::uint64_t, 4> key{F.mul(s, A.a).v, F.mul(s, A.b).v,
                                                 F.mul(s, A.c).v, F.mul(s, A.d).v};
          if (seen.insert(key).second) {
            out.push_back(Mat2{F, {key[0]}, {key[1]}, {key[2]}, {key[3]}});
          }
        }
      }
    }
  }
  return out;
}

Mat2 parse_mat2(const Field& F, std::string_view text) {
  std::array<Elem, 4> entries{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 3) == (comma == std::string_view::npos)) {
      throw Error(ErrorCode::Parse, "matrix must be 'a,b,c,d'");
    }
    entries[i] = parse_element(F, text.substr(start, comma == text.npos ? text.npos : comma - start));
    start = comma + 1;
  }
  return make_mat2(F, entries[0], entries[1], entries[2], entries[3]);
}

std::string format_mat2(const Mat2& A) {
  const Field& F = A.field;
  return format_element(F, A.a) + "," + format_element(F, A.b) + "," + format_element(F, A.c) +
         "," + format_element(F, A.d);
}

}  // namespace fforder
