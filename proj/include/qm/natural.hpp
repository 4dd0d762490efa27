#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace qm {

// Non-negative arbitrary-precision integer, the binary numeral behind every code.
class Natural {
 public:
  Natural() = default;
  explicit Natural(std::uint64_t value);

  // Binary numeral, most significant bit first ("0" or a string starting with '1').
  static Natural from_binary(std::string_view bits);
  static Natural from_decimal(std::string_view digits);

  std::string to_binary() const { return value().get_str(2); }
  std::string to_decimal() const { return value().get_str(10); }

  bool is_zero() const {
    const auto* s = std::get_if<std::uint64_t>(&value_);
    return s != nullptr && *s == 0;
  }
  // Number of binary digits, 0 for zero; equals ceil(log2(x+1)).
  std::size_t bit_length() const;
  mpz_class value() const;

  Natural& operator+=(const Natural& rhs);
  // Requires *this >= rhs.
  Natural& operator-=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(const Natural& lhs, const Natural& rhs);

  Natural mul_small(std::uint64_t factor) const;

  friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs);
  friend bool operator==(const Natural& lhs, const Natural& rhs) { return (lhs <=> rhs) == 0; }

 private:
  explicit Natural(const mpz_class& v);
  // Values below 2^64 stay inline; larger ones live in GMP.
  std::variant<std::uint64_t, mpz_class> value_{std::uint64_t{0}};
};

}  // namespace qm
