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

#include "field.hpp"

#include "intfactor.hpp"
#include "poly.hpp"

#include <charconv>

namespace fforder {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::Parse, std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p >= Field::kMaxPrime) {
    throw Error(ErrorCode::CardinalityOverflow, "characteristic must be below 2^32");
  }
}

}  // namespace

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (k_ > 1) build_tables();
}

Field Field::prime(std::uint64_t p) {
  check_prime(p);
  return Field(p, 1, {});
}

Field Field::make(std::uint64_t p, unsigned k) {
  check_prime(p);
  if (k == 0) throw Error(ErrorCode::PreconditionFailed, "extension degree must be positive");
  if (k == 1) return prime(p);
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw Error(ErrorCode::CardinalityOverflow, "extension fields are limited to q <= 2^20");
    }
  }
  const Field base = prime(p);
  const Poly modulus = poly::find_irreducible(base, k);
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(modulus.c.size());
  for (const Elem e : modulus.c) coeffs.push_back(e.v);
  return Field(p, k, std::move(coeffs));
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  check_prime(p);
  if (modulus.size() < 2) throw Error(ErrorCode::PreconditionFailed, "modulus must have degree >= 1");
  const Field base = prime(p);
  std::vector<Elem> coeffs;
  for (const auto c : modulus) coeffs.push_back(base.from_int(static_cast<std::int64_t>(c % p)));
  const Poly f(std::move(coeffs));
  if (!f.is_monic() || f.degree() + 1 != static_cast<long>(modulus.size())) {
    throw Error(ErrorCode::PreconditionFailed, "modulus must be monic");
  }
  if (f.degree() == 1) return base;
  if (!poly::is_irreducible(base, f)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible");
  u128 q = 1;
  for (long i = 0; i < f.degree(); ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw Error(ErrorCode::CardinalityOverflow, "extension fields are limited to q <= 2^20");
    }
  }
  std::vector<std::uint64_t> reduced;
  for (const Elem e : f.c) reduced.push_back(e.v);
  return Field(p, static_cast<unsigned>(f.degree()), std::move(reduced));
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

Elem Field::element(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::PreconditionFailed, "element index out of range");
  return {index};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > k_) throw Error(ErrorCode::LengthMismatch, "too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return {code};
}

std::vector<std::uint64_t> Field::coeffs(Elem x) const {
  std::vector<std::uint64_t> out(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = x.v % p_;
    x.v /= p_;
  }
  return out;
}

std::uint64_t Field::digit_add(std::uint64_t a, std::uint64_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t Field::digit_neg(std::uint64_t a) const noexcept {
  if (p_ == 2) return a;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return out;
}

// Schoolbook product of digit vectors reduced by the modulus. Only used while
// building the tables.
std::uint64_t Field::slow_mul(std::uint64_t a, std::uint64_t b) const {
  const auto da = coeffs({a});
  const auto db = coeffs({b});
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j <= k_; ++j) {
      auto& slot = prod[i - k_ + j];
      slot = (slot + (p_ - c) * modulus_[j]) % p_;
    }
  }
  std::uint64_t code = 0;
  for (unsigned i = k_; i-- > 0;) code = code * p_ + prod[i];
  return code;
}

void Field::build_tables() {
  const std::uint64_t order = q_ - 1;
  auto exp_table = std::make_shared<std::vector<std::uint32_t>>(2 * order);
  auto log_table = std::make_shared<std::vector<std::uint32_t>>(q_, 0);
  for (std::uint64_t g = 2; g < q_; ++g) {
    // Walk the powers of g; g generates iff the walk returns to 1 only at q-1.
    std::uint64_t x = 1;
    std::uint64_t i = 0;
    bool generator = true;
    for (; i < order; ++i) {
      if (i > 0 && x == 1) {
        generator = false;
        break;
      }
      (*exp_table)[i] = static_cast<std::uint32_t>(x);
      x = slow_mul(x, g);
    }
    if (!generator) continue;
    for (std::uint64_t j = 0; j < order; ++j) {
      (*exp_table)[order + j] = (*exp_table)[j];
      (*log_table)[(*exp_table)[j]] = static_cast<std::uint32_t>(j);
    }
    exp_table_ = std::move(exp_table);
    log_table_ = std::move(log_table);
    exp_ = exp_table_->data();
    log_ = log_table_->data();
    return;
  }
  throw Error(ErrorCode::PreconditionFailed, "no primitive element found");
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (k_ > 1) return {exp_[(q_ - 1) - log_[a.v]]};
  // Extended Euclid on (a, p).
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  auto r = static_cast<std::int64_t>(p_);
  auto new_r = static_cast<std::int64_t>(a.v);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  return from_int(t);
}

Elem Field::pow(Elem a, u128 e) const noexcept {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  if (k_ > 1) {
    const std::uint64_t order = q_ - 1;
    const auto l = static_cast<std::uint64_t>((u128{log_[a.v]} * (e % order)) % order);
    return {exp_[l]};
  }
  Elem result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::pth_root(Elem a) const noexcept {
  if (k_ == 1) return a;
  return pow(a, q_ / p_);
}

bool Field::is_square(Elem a) const noexcept {
  if (a.v == 0 || p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

Elem Field::primitive_element() const {
  if (q_ == 2) return one();
  if (k_ > 1) return {exp_[1]};
  const auto group = factor_integer(q_ - 1);
  for (std::uint64_t g = 2; g < q_; ++g) {
    const Elem x{g};
    const u128 ord = order_from_group(group, [&](u128 e) { return pow(x, e) == one(); });
    if (ord == q_ - 1) return x;
  }
  throw Error(ErrorCode::PreconditionFailed, "no primitive element found");
}

std::string Field::describe() const {
  std::string out = "F_" + std::to_string(q_);
  if (k_ > 1) {
    const Field base = prime(p_);
    std::vector<Elem> coeffs;
    for (const auto c : modulus_) coeffs.push_back({c});
    out += " = F_" + std::to_string(p_) + "[x]/(" + pretty_poly(base, Poly(coeffs)) + ")";
  }
  return out;
}

Field parse_field_spec(std::string_view spec) {
  const auto caret = spec.find('^');
  const std::uint64_t p = parse_u64(spec.substr(0, caret), "field spec");
  std::uint64_t k = 1;
  if (caret != std::string_view::npos) k = parse_u64(spec.substr(caret + 1), "field spec");
  if (k == 0 || k > 64) throw Error(ErrorCode::Parse, "invalid field spec: extension degree");
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrime, "invalid field spec: " + std::to_string(p) + " is not prime");
  }
  return Field::make(p, static_cast<unsigned>(k));
}

Elem parse_element(const Field& field, std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const std::uint64_t value = parse_u64(text, "field element");
  if (negative) {
    if (!field.is_prime_field() || value >= field.p()) {
      throw Error(ErrorCode::Parse, "negative element codes are only accepted in prime fields");
    }
    return field.neg({value});
  }
  if (value >= field.q()) {
    throw Error(ErrorCode::Parse, "element code " + std::to_string(value) + " is not below q = " +
                                      std::to_string(field.q()));
  }
  return {value};
}

std::string format_element(const Field& /*field*/, Elem x) { return std::to_string(x.v); }

}  // namespace fforder
