#include "qm/natural.hpp"

#include <stdexcept>

namespace qm {

namespace {

mpz_class from_u64(std::uint64_t value) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof value, 0, 0, &value);
  return z;
}

void require_digits(std::string_view s, char max_digit, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  for (char c : s)
    if (c < '0' || c > max_digit) throw std::invalid_argument(std::string("bad digit in ") + what);
}

}  // namespace

Natural::Natural(std::uint64_t value) : value_(value) {}

Natural::Natural(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
    std::uint64_t x = 0;
    mpz_export(&x, nullptr, -1, sizeof x, 0, 0, v.get_mpz_t());
    value_ = x;
  } else {
    value_ = v;
  }
}

mpz_class Natural::value() const {
  if (const auto* s = std::get_if<std::uint64_t>(&value_)) return from_u64(*s);
  return std::get<mpz_class>(value_);
}

Natural Natural::from_binary(std::string_view bits) {
  require_digits(bits, '1', "binary numeral");
  if (bits.size() > 1 && bits.front() != '1')
    throw std::invalid_argument("binary numeral has a leading zero");
  return Natural(mpz_class(std::string(bits), 2));
}

Natural Natural::from_decimal(std::string_view digits) {
  require_digits(digits, '9', "decimal numeral");
  return Natural(mpz_class(std::string(digits), 10));
}

std::size_t Natural::bit_length() const {
  if (const auto* s = std::get_if<std::uint64_t>(&value_))
    return *s == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(*s));
  return mpz_sizeinbase(std::get<mpz_class>(value_).get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
  const auto* a = std::get_if<std::uint64_t>(&value_);
  const auto* b = std::get_if<std::uint64_t>(&rhs.value_);
  std::uint64_t sum = 0;
  if (a != nullptr && b != nullptr && !__builtin_add_overflow(*a, *b, &sum)) {
    value_ = sum;
    return *this;
  }
  *this = Natural(mpz_class(value() + rhs.value()));
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw std::domain_error("natural subtraction underflow");
  const auto* a = std::get_if<std::uint64_t>(&value_);
  const auto* b = std::get_if<std::uint64_t>(&rhs.value_);
  if (a != nullptr && b != nullptr) {
    value_ = *a - *b;
    return *this;
  }
  *this = Natural(mpz_class(value() - rhs.value()));
  return *this;
}

Natural operator*(const Natural& lhs, const Natural& rhs) {
  const auto* a = std::get_if<std::uint64_t>(&lhs.value_);
  const auto* b = std::get_if<std::uint64_t>(&rhs.value_);
  std::uint64_t product = 0;
  if (a != nullptr && b != nullptr && !__builtin_mul_overflow(*a, *b, &product)) return Natural(product);
  return Natural(mpz_class(lhs.value() * rhs.value()));
}

Natural Natural::mul_small(std::uint64_t factor) const { return *this * Natural(factor); }

std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) {
  const auto* a = std::get_if<std::uint64_t>(&lhs.value_);
  const auto* b = std::get_if<std::uint64_t>(&rhs.value_);
  if (a != nullptr && b != nullptr) return *a <=> *b;
  // Inline values are always smaller than GMP ones.
  if (a != nullptr) return std::strong_ordering::less;
  if (b != nullptr) return std::strong_ordering::greater;
  return cmp(std::get<mpz_class>(lhs.value_), std::get<mpz_class>(rhs.value_)) <=> 0;
}

}  // namespace qm
