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
 * @file poly.hpp
 * @brief Dense univariate polynomials over a Field.
 *
 * Poly holds coefficients only (index = degree, trailing zeros trimmed); the
 * Field is passed to every operation, in the style of a ring context. The
 * factorization is the classical squarefree / distinct-degree /
 * equal-degree pipeline with a seeded splitting sequence, so its output is
 * reproducible.
 */

#include "field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fforder {

struct Poly {
  std::vector<Elem> c;

  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

  [[nodiscard]] bool is_zero() const noexcept { return c.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
  [[nodiscard]] Elem lead() const noexcept { return c.empty() ? Elem{} : c.back(); }
  [[nodiscard]] Elem coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : Elem{}; }
  [[nodiscard]] bool is_monic() const noexcept { return !c.empty() && c.back() == Elem{1}; }

  void trim() {
    while (!c.empty() && c.back().v == 0) c.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Orders by degree, then by the coefficient tuple from low to high degree.
bool poly_less(const Poly& a, const Poly& b);

struct PolyFactorization {
  Elem unit;                                       // leading coefficient
  std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity
};

namespace poly {

Poly constant(Elem c);
Poly monomial(Elem c, std::size_t degree);
Poly x();

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Elem s);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Throws ZeroPolynomial on division by zero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly quo(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& a);
Elem eval(const Field& F, const Poly& a, Elem x);

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& F, const Poly& base, u128 e, const Poly& m);

/// True iff f is irreducible over F. Throws ZeroPolynomial.
bool is_irreducible(const Field& F, const Poly& f);

/// Complete factorization; factors sorted by poly_less. Throws ZeroPolynomial
/// and PreconditionFailed (degree 0).
PolyFactorization factor(const Field& F, const Poly& f, std::uint64_t seed = 0);

/// Product of the factorization, for round-trip checks.
Poly expand(const Field& F, const PolyFactorization& fac);

/// Lexicographically smallest monic irreducible of the given degree.
Poly find_irreducible(const Field& F, unsigned degree);

}  // namespace poly

/// Comma-separated coefficient codes, low to high: "1,0,1" is X^2 + 1.
Poly parse_poly(const Field& F, std::string_view text);
std::string format_poly(const Field& F, const Poly& f);
/// Human form such as "X^9 + X + 1" (coefficients as element codes).
std::string pretty_poly(const Field& F, const Poly& f);

}  // namespace fforder
