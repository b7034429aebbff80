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
#include "intfactor.hpp"
#include "poly.hpp"

namespace fforder {

/// Multiplicative order of a nonzero element of F_q. Throws ZeroElement.
u128 element_order(const Field& F, Elem x);

/// F_q[X]/(f) for a monic irreducible f over a base field F_q. Elements are
/// polynomials of degree below deg f; the class of X is generator().
class ExtensionField {
 public:
  /// Throws NotIrreducible, DegreeTooSmall (deg f < 1).
  ExtensionField(Field base, Poly modulus);

  [[nodiscard]] const Field& base() const noexcept { return base_; }
  [[nodiscard]] const Poly& modulus() const noexcept { return modulus_; }
  [[nodiscard]] unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.degree()); }

  [[nodiscard]] Poly zero() const { return {}; }
  [[nodiscard]] Poly one() const { return poly::constant(base_.one()); }
  [[nodiscard]] Poly generator() const { return reduce(poly::x()); }
  [[nodiscard]] Poly from_base(Elem c) const { return poly::constant(c); }
  [[nodiscard]] Poly reduce(const Poly& a) const { return poly::rem(base_, a, modulus_); }

  [[nodiscard]] Poly add(const Poly& a, const Poly& b) const { return poly::add(base_, a, b); }
  [[nodiscard]] Poly sub(const Poly& a, const Poly& b) const { return poly::sub(base_, a, b); }
  [[nodiscard]] Poly neg(const Poly& a) const { return poly::neg(base_, a); }
  [[nodiscard]] Poly scale(const Poly& a, Elem s) const { return poly::scale(base_, a, s); }
  [[nodiscard]] Poly mul(const Poly& a, const Poly& b) const {
    return poly::mulmod(base_, a, b, modulus_);
  }
  /// Throws ZeroElement.
  [[nodiscard]] Poly inv(const Poly& a) const;
  [[nodiscard]] Poly div(const Poly& a, const Poly& b) const { return mul(a, inv(b)); }
  [[nodiscard]] Poly pow(const Poly& a, u128 e) const {
    return poly::powmod(base_, a, e, modulus_);
  }
  /// a^(q^times), by repeated q-th powers.
  [[nodiscard]] Poly frobenius(const Poly& a, std::uint64_t times) const;

  /// True iff a lies in the base field F_q.
  [[nodiscard]] static bool in_base(const Poly& a) noexcept { return a.degree() <= 0; }

  /// Factorization of q^n - 1. Throws OrderWidth above max_bits.
  [[nodiscard]] IntFactorization group_order(unsigned max_bits = 128) const;

  /// Multiplicative order given the factored group order.
  [[nodiscard]] u128 element_order(const Poly& a, const IntFactorization& group) const;

 private:
  Field base_;
  Poly modulus_;
};

}  // namespace fforder
