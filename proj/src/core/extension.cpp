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

#include "extension.hpp"

namespace fforder {

u128 element_order(const Field& F, Elem x) {
  if (x.v == 0) throw Error(ErrorCode::ZeroElement, "order of zero");
  if (F.q() == 2) return 1;
  const auto group = factor_integer(F.q() - 1);
  return order_from_group(group, [&](u128 e) { return F.pow(x, e) == F.one(); });
}

ExtensionField::ExtensionField(Field base, Poly modulus) : base_(std::move(base)) {
  if (modulus.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "modulus must have degree >= 1");
  modulus_ = poly::monic(base_, modulus);
  if (!poly::is_irreducible(base_, modulus_)) {
    throw Error(ErrorCode::NotIrreducible, "extension modulus is reducible");
  }
}

Poly ExtensionField::inv(const Poly& a) const {
  Poly r0 = modulus_;
  Poly r1 = reduce(a);
  if (r1.is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  Poly s0;
  Poly s1 = one();
  while (!r1.is_zero()) {
    auto [quotient, remainder] = poly::divmod(base_, r0, r1);
    Poly s2 = poly::sub(base_, s0, poly::mul(base_, quotient, s1));
    r0 = std::move(r1);
    r1 = std::move(remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return reduce(poly::scale(base_, s0, base_.inv(r0.lead())));
}

Poly ExtensionField::frobenius(const Poly& a, std::uint64_t times) const {
  Poly out = reduce(a);
  for (std::uint64_t i = 0; i < times; ++i) out = pow(out, base_.q());
  return out;
}

IntFactorization ExtensionField::group_order(unsigned max_bits) const {
  return factor_power_minus_one(base_.q(), degree(), max_bits);
}

u128 ExtensionField::element_order(const Poly& a, const IntFactorization& group) const {
  const Poly x = reduce(a);
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "order of zero");
  const Poly unit = one();
  return order_from_group(group, [&](u128 e) { return pow(x, e) == unit; });
}

}  // namespace fforder
