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
 * @file field.hpp
 * @brief Finite fields F_q, q = p^k, with elements as compact codes.
 *
 * An element of F_{p^k} = F_p[x]/(m(x)) is stored as the integer
 * c_0 + c_1 p + ... + c_{k-1} p^{k-1} of its coefficient vector, so every
 * element is a single word and F_q is enumerated by the codes 0..q-1. The prime
 * subfield F_p is the codes 0..p-1.
 *
 * Prime fields use direct modular arithmetic (p < 2^32). Proper extensions
 * multiply through exp/log tables against a primitive element and are limited
 * to q <= 2^20.
 *
 * A Field is a cheap value: copies share the tables.
 */

#include "common.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fforder {

struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 32;
  static constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

  /// F_p. Throws NonPrime, CardinalityOverflow.
  static Field prime(std::uint64_t p);

  /// F_{p^k} with the lexicographically smallest monic irreducible modulus,
  /// comparing coefficient tuples (c_0, ..., c_{k-1}) with c_0 most significant.
  static Field make(std::uint64_t p, unsigned k);

  /// F_p[x]/(modulus); modulus is low-to-high, monic, irreducible.
  static Field with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] unsigned k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t q() const noexcept { return q_; }
  [[nodiscard]] bool is_prime_field() const noexcept { return k_ == 1; }
  /// Empty for prime fields.
  [[nodiscard]] const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  [[nodiscard]] Elem zero() const noexcept { return {0}; }
  [[nodiscard]] Elem one() const noexcept { return {1}; }
  [[nodiscard]] Elem from_int(std::int64_t n) const noexcept;
  [[nodiscard]] Elem element(std::uint64_t index) const;
  [[nodiscard]] Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint64_t> coeffs(Elem x) const;

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
      const std::uint64_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    return {digit_add(a.v, b.v)};
  }
  [[nodiscard]] Elem neg(Elem a) const noexcept {
    if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    return {digit_neg(a.v)};
  }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return {a.v * b.v % p_};
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[log_[a.v] + log_[b.v]]};
  }
  /// Throws ZeroElement.
  [[nodiscard]] Elem inv(Elem a) const;
  [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  [[nodiscard]] Elem pow(Elem a, u128 e) const noexcept;
  /// x^(q/p), the inverse of the absolute Frobenius x -> x^p.
  [[nodiscard]] Elem pth_root(Elem a) const noexcept;

  [[nodiscard]] bool is_square(Elem a) const noexcept;

  /// A generator of F_q^*.
  [[nodiscard]] Elem primitive_element() const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  [[nodiscard]] std::uint64_t digit_add(std::uint64_t a, std::uint64_t b) const noexcept;
  [[nodiscard]] std::uint64_t digit_neg(std::uint64_t a) const noexcept;
  [[nodiscard]] std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  std::uint64_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> modulus_;

  // exp_ has length 2(q-1) so a sum of two logs indexes it directly.
  std::shared_ptr<const std::vector<std::uint32_t>> exp_table_;
  std::shared_ptr<const std::vector<std::uint32_t>> log_table_;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
};

/// "p" or "p^k". Throws Parse or NonPrime.
Field parse_field_spec(std::string_view spec);

/// Decimal element code in [0, q), or a signed integer when q = p.
Elem parse_element(const Field& field, std::string_view text);
std::string format_element(const Field& field, Elem x);

}  // namespace fforder
