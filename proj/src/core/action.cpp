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

#include <numeric>

namespace fforder {

namespace {

std::uint64_t q_power(const Mat2& A, unsigned r, const Caps& caps) {
  const u128 qr = checked_pow(A.field.q(), r);
  if (qr + 1 > caps.degree) {
    throw Error(ErrorCode::DegreeCap, "deg F_{A,r} = q^r + 1 exceeds the degree cap " +
                                          std::to_string(caps.degree));
  }
  return static_cast<std::uint64_t>(qr);
}

}  // namespace

std::uint64_t FAr_degree(const Mat2& A, unsigned r, const Caps& caps) {
  const std::uint64_t qr = q_power(A, r, caps);
  return A.b.v != 0 ? qr + 1 : qr;
}

Poly build_FAr(const Mat2& A, unsigned r, const Caps& caps) {
  const Field& F = A.field;
  const std::uint64_t qr = q_power(A, r, caps);
  std::vector<Elem> c(qr + 2);
  // Accumulate so r = 0 (q^r = 1) merges the X terms.
  c[qr + 1] = F.add(c[qr + 1], A.b);
  c[qr] = F.sub(c[qr], A.a);
  c[1] = F.add(c[1], A.d);
  c[0] = F.sub(c[0], A.c);
  return Poly(std::move(c));
}

Poly act_poly(const Mat2& A, const Poly& f) {
  const Field& F = A.field;
  if (f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "action needs degree >= 2");
  if (!poly::is_irreducible(F, f)) throw Error(ErrorCode::NotIrreducible, "action needs an irreducible polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  const Poly num({A.c, A.a});  // aX + c
  const Poly den({A.d, A.b});  // bX + d
  std::vector<Poly> num_pow{poly::constant(F.one())};
  std::vector<Poly> den_pow{poly::constant(F.one())};
  for (std::size_t i = 1; i <= n; ++i) {
    num_pow.push_back(poly::mul(F, num_pow.back(), num));
    den_pow.push_back(poly::mul(F, den_pow.back(), den));
  }
  Poly out;
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.c[i].v == 0) continue;
    out = poly::add(F, out, poly::scale(F, poly::mul(F, num_pow[i], den_pow[n - i]), f.c[i]));
  }
  if (out.degree() != f.degree()) {
    throw Error(ErrorCode::StructureViolation, "action dropped the degree of an irreducible polynomial");
  }
  return poly::monic(F, out);
}

Poly act_element(const Mat2& A, const ExtensionField& E, const Poly& theta) {
  if (!(E.base() == A.field)) throw Error(ErrorCode::FieldMismatch, "matrix and element fields differ");
  const Poly t = E.reduce(theta);
  if (ExtensionField::in_base(t)) {
    throw Error(ErrorCode::BaseFieldElement, "the action on elements needs theta outside F_q");
  }
  const Poly num = E.sub(E.scale(t, A.d), E.from_base(A.c));
  const Poly den = E.add(E.scale(t, A.field.neg(A.b)), E.from_base(A.a));
  return E.div(num, den);
}

bool invariance_check(const Mat2& A, const Poly& f) {
  return act_poly(A, f) == poly::monic(A.field, f);
}

bool degree_allowed(std::uint64_t degree, std::uint64_t D, unsigned r) {
  if (degree <= 2) return true;
  if (D == 0 || degree % D != 0 || r == 0) return false;
  const std::uint64_t k = degree / D;
  return r % k == 0 && std::gcd(r / k, D) == 1;
}

DegreeCensus compute_census(const Mat2& A, unsigned r, const Caps& caps, std::uint64_t seed) {
  DegreeCensus census{.A = A, .r = r};
  census.D = pgl_order(A);
  const Poly F_Ar = build_FAr(A, r, caps);
  census.total_degree = static_cast<std::uint64_t>(F_Ar.degree());
  census.factorization = poly::factor(A.field, F_Ar, seed);
  for (const auto& [g, mult] : census.factorization.factors) {
    const auto deg = static_cast<std::uint64_t>(g.degree());
    ++census.degrees[deg];
    census.multiplicities[deg] += mult;
    if (!degree_allowed(deg, census.D, r)) {
      census.violations.push_back("factor " + format_poly(A.field, g) + " of degree " +
                                  std::to_string(deg) + " is outside the menu for D = " +
                                  std::to_string(census.D) + ", r = " + std::to_string(r));
    }
  }
  const auto it = census.degrees.find(census.D * r);
  census.N_Dr = it == census.degrees.end() ? 0 : it->second;
  return census;
}

DegreeCensus factor_census(const Mat2& A, unsigned r, const Caps& caps, std::uint64_t seed) {
  DegreeCensus census = compute_census(A, r, caps, seed);
  if (!census.violations.empty()) throw Error(ErrorCode::StructureViolation, census.violations.front());
  return census;
}

CensusCheck verify_census(const Mat2& A, unsigned r, const Caps& caps, std::uint64_t seed) {
  CensusCheck check{.census = compute_census(A, r, caps, seed)};
  for (const auto& [g, mult] : check.census.factorization.factors) {
    if (g.degree() < 2) continue;
    ++check.invariance_checked;
    if (!invariance_check(A, g)) {
      check.invariance_failures.push_back("factor " + format_poly(A.field, g) + " is not invariant");
    }
  }
  return check;
}

}  // namespace fforder
