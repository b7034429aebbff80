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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fforder {

using u128 = unsigned __int128;

/// Exact integers for counts of exponent vectors.
using BigInt = boost::multiprecision::cpp_int;

/// 50 decimal digits; the closed-form bounds need well over 80 bits.
using Real = boost::multiprecision::cpp_bin_float_50;

// Numbering is shared with the C status codes in fforder.h.
enum class ErrorCode : int {
  NonPrime = 1,
  CardinalityOverflow = 2,
  ZeroPolynomial = 3,
  ZeroElement = 4,
  Overflow = 5,
  IdentityClass = 6,
  NoPrimitiveRoot = 7,
  BudgetExceeded = 8,
  DegreeCap = 9,
  DegreeTooSmall = 10,
  NotIrreducible = 11,
  BaseFieldElement = 12,
  StructureViolation = 13,
  PreconditionFailed = 14,
  EnumerationCap = 15,
  LengthMismatch = 16,
  OrderWidth = 17,
  Parse = 18,
  RTooSmall = 19,
  FieldMismatch = 20,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Desk-scale limits. FFORDER_CAPS (see the CLI) overrides these.
struct Caps {
  std::uint64_t degree = std::uint64_t{1} << 20;  // max degree of F_{A,r}
  std::uint64_t enumeration = 1'000'000;          // max |I_{s,t,m}| to enumerate
  std::uint64_t injectivity = 10'000;             // experiments check Lambda below this size
  unsigned order_bits = 128;                      // max bit width of q^n - 1
};

std::string to_string(u128 value);

/// Throws Overflow when the result does not fit in 128 bits.
u128 checked_pow(u128 base, unsigned exponent);

/// base^exponent - 1 for base >= 1; fits whenever the difference does, so
/// 2^128 - 1 is representable. Throws Overflow otherwise.
u128 checked_pow_minus_one(u128 base, unsigned exponent);

/// Number of bits needed to hold value (0 for 0).
unsigned bit_width(u128 value);

}  // namespace fforder
