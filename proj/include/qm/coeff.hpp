#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "qm/natural.hpp"

namespace qm {

enum class Sign : std::uint8_t { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Integer code: empty, or a sign followed by a binary magnitude.
class IntCode {
 public:
  IntCode() = default;
  IntCode(Sign sign, Natural magnitude);

  // "" is the empty code; otherwise "+101", "-11", ...
  static IntCode from_binary(std::string_view code);
  static IntCode from_int(std::int64_t value);
  std::string to_binary() const;

  bool empty() const { return !present_; }
  bool is_zero() const { return magnitude_.is_zero(); }
  Sign sign() const { return sign_; }
  const Natural& magnitude() const { return magnitude_; }

 private:
  bool present_ = false;
  Sign sign_ = Sign::plus;
  Natural magnitude_;
};

// Rational code sK/m/n with value s(K + m/n), m < n. Fractions are never reduced.
class RatCode {
 public:
  RatCode() = default;
  RatCode(Sign sign, Natural whole, Natural numerator, Natural denominator);

  // "" is the empty code; otherwise "-11/10/101", ...
  static RatCode from_binary(std::string_view code);
  std::string to_binary() const;

  bool empty() const { return !present_; }
  bool is_zero() const { return whole_.is_zero() && numerator_.is_zero(); }
  Sign sign() const { return sign_; }
  const Natural& whole() const { return whole_; }
  const Natural& numerator() const { return numerator_; }
  const Natural& denominator() const { return denominator_; }

 private:
  bool present_ = false;
  Sign sign_ = Sign::plus;
  Natural whole_;
  Natural numerator_;
  Natural denominator_{1};
};

IntCode int_add(const IntCode& x1, const IntCode& x2);
IntCode int_sub(const IntCode& x1, const IntCode& x2);
IntCode int_negate(const IntCode& x);
bool int_equal(const IntCode& x1, const IntCode& x2);
std::size_t int_size(const IntCode& x);

RatCode rat_add(const RatCode& x1, const RatCode& x2);
RatCode rat_sub(const RatCode& x1, const RatCode& x2);
RatCode rat_negate(const RatCode& x);
bool rat_equal(const RatCode& x1, const RatCode& x2);
std::size_t rat_size(const RatCode& x);

IntCode parse_int_coeff(std::string_view text);
RatCode parse_rat_coeff(std::string_view text);
std::string format_coeff(const IntCode& x);
std::string format_coeff(const RatCode& x);

enum class CoeffKind : std::uint8_t { integer, rational };

std::variant<IntCode, RatCode> parse_coeff(std::string_view text, CoeffKind kind);

struct IntDomain {
  using Code = IntCode;
  static constexpr CoeffKind kind = CoeffKind::integer;
  static constexpr std::string_view name = "int";

  static Code zero() { return {}; }
  static Code add(const Code& a, const Code& b) { return int_add(a, b); }
  static Code sub(const Code& a, const Code& b) { return int_sub(a, b); }
  static Code negate(const Code& a) { return int_negate(a); }
  static bool is_zero(const Code& a) { return a.is_zero(); }
  static bool equal(const Code& a, const Code& b) { return int_equal(a, b); }
  static std::size_t size(const Code& a) { return int_size(a); }
  static Code scale(const Code& a, std::uint64_t factor);
  static Code parse(std::string_view text) { return parse_int_coeff(text); }
  static std::string format(const Code& a) { return format_coeff(a); }
};

struct RatDomain {
  using Code = RatCode;
  static constexpr CoeffKind kind = CoeffKind::rational;
  static constexpr std::string_view name = "rat";

  static Code zero() { return {}; }
  static Code add(const Code& a, const Code& b) { return rat_add(a, b); }
  static Code sub(const Code& a, const Code& b) { return rat_sub(a, b); }
  static Code negate(const Code& a) { return rat_negate(a); }
  static bool is_zero(const Code& a) { return a.is_zero(); }
  static bool equal(const Code& a, const Code& b) { return rat_equal(a, b); }
  static std::size_t size(const Code& a) { return rat_size(a); }
  static Code scale(const Code& a, std::uint64_t factor);
  static Code parse(std::string_view text) { return parse_rat_coeff(text); }
  static std::string format(const Code& a) { return format_coeff(a); }
};

template <class D>
concept CoefficientDomain = requires(const typename D::Code& a, std::string_view text) {
  { D::zero() } -> std::same_as<typename D::Code>;
  { D::add(a, a) } -> std::same_as<typename D::Code>;
  { D::sub(a, a) } -> std::same_as<typename D::Code>;
  { D::negate(a) } -> std::same_as<typename D::Code>;
  { D::is_zero(a) } -> std::same_as<bool>;
  { D::equal(a, a) } -> std::same_as<bool>;
  { D::size(a) } -> std::same_as<std::size_t>;
  { D::scale(a, std::uint64_t{}) } -> std::same_as<typename D::Code>;
  { D::parse(text) } -> std::same_as<typename D::Code>;
  { D::format(a) } -> std::same_as<std::string>;
};

}  // namespace qm
