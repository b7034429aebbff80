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

#include "common.hpp"

#include <algorithm>

namespace fforder {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::CardinalityOverflow: return "CardinalityOverflow";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IdentityClass: return "IdentityClass";
    case ErrorCode::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegreeCap: return "DegreeCap";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::BaseFieldElement: return "BaseFieldElement";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::EnumerationCap: return "EnumerationCap";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OrderWidth: return "OrderWidth";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 checked_pow(u128 base, unsigned exponent) {
  u128 result = 1;
  const u128 max = ~u128{0};
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > max / base) {
      throw Error(ErrorCode::Overflow, "power does not fit in 128 bits");
    }
    result *= base;
  }
  return result;
}

u128 checked_pow_minus_one(u128 base, unsigned exponent) {
  if (exponent == 0) return 0;
  // base^e - 1 = (base^(e-1) - 1) * base + (base - 1)
  const u128 lower = checked_pow(base, exponent - 1) - 1;
  const u128 max = ~u128{0};
  if (lower != 0 && lower > (max - (base - 1)) / base) {
    throw Error(ErrorCode::Overflow, "power does not fit in 128 bits");
  }
  return lower * base + (base - 1);
}

unsigned bit_width(u128 value) {
  unsigned bits = 0;
  while (value != 0) {
    ++bits;
    value >>= 1;
  }
  return bits;
}

}  // namespace fforder
