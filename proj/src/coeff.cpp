#include "qm/coeff.hpp"

#include <stdexcept>

#include "qm/errors.hpp"

namespace qm {

namespace {

struct Signed {
  bool negative = false;
  Natural magnitude;
};

Signed add_signed(const Signed& a, const Signed& b) {
  if (a.negative == b.negative) return {a.negative, a.magnitude + b.magnitude};
  if (a.magnitude >= b.magnitude) return {a.negative, a.magnitude - b.magnitude};
  return {b.negative, b.magnitude - a.magnitude};
}

Signed as_signed(const IntCode& x) {
  if (x.empty()) return {};
  return {x.sign() == Sign::minus, x.magnitude()};
}

IntCode from_signed(Signed s) {
  if (s.magnitude.is_zero()) return {};
  return IntCode(s.negative ? Sign::minus : Sign::plus, std::move(s.magnitude));
}

Sign parse_sign(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw std::invalid_argument("code must start with a sign");
}

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

bool is_decimal_natural(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

IntCode::IntCode(Sign sign, Natural magnitude)
    : present_(true), sign_(sign), magnitude_(std::move(magnitude)) {}

IntCode IntCode::from_binary(std::string_view code) {
  if (code.empty()) return {};
  return IntCode(parse_sign(code.front()), Natural::from_binary(code.substr(1)));
}

IntCode IntCode::from_int(std::int64_t value) {
  if (value == 0) return {};
  auto mag = value < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(value)
                       : static_cast<std::uint64_t>(value);
  return IntCode(value < 0 ? Sign::minus : Sign::plus, Natural(mag));
}

std::string IntCode::to_binary() const {
  if (!present_) return {};
  return sign_char(sign_) + magnitude_.to_binary();
}

RatCode::RatCode(Sign sign, Natural whole, Natural numerator, Natural denominator)
    : present_(true),
      sign_(sign),
      whole_(std::move(whole)),
      numerator_(std::move(numerator)),
      denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw std::invalid_argument("zero denominator");
  if (numerator_ >= denominator_) throw std::invalid_argument("numerator not below denominator");
}

RatCode RatCode::from_binary(std::string_view code) {
  if (code.empty()) return {};
  Sign s = parse_sign(code.front());
  code.remove_prefix(1);
  auto a = code.find('/');
  auto b = a == std::string_view::npos ? a : code.find('/', a + 1);
  if (b == std::string_view::npos) throw std::invalid_argument("rational code needs K/m/n");
  return RatCode(s, Natural::from_binary(code.substr(0, a)),
                 Natural::from_binary(code.substr(a + 1, b - a - 1)),
                 Natural::from_binary(code.substr(b + 1)));
}

std::string RatCode::to_binary() const {
  if (!present_) return {};
  return sign_char(sign_) + whole_.to_binary() + '/' + numerator_.to_binary() + '/' +
         denominator_.to_binary();
}

IntCode int_add(const IntCode& x1, const IntCode& x2) {
  return from_signed(add_signed(as_signed(x1), as_signed(x2)));
}

IntCode int_sub(const IntCode& x1, const IntCode& x2) { return int_add(x1, int_negate(x2)); }

IntCode int_negate(const IntCode& x) {
  if (x.empty()) return {};
  return IntCode(flip(x.sign()), x.magnitude());
}

bool int_equal(const IntCode& x1, const IntCode& x2) {
  if (x1.is_zero() || x2.is_zero()) return x1.is_zero() && x2.is_zero();
  return x1.sign() == x2.sign() && x1.magnitude() == x2.magnitude();
}

std::size_t int_size(const IntCode& x) {
  return x.empty() ? 0 : x.magnitude().bit_length() + 1;
}

RatCode rat_add(const RatCode& x1, const RatCode& x2) {
  if (x1.empty()) return x2.is_zero() ? RatCode{} : x2;
  if (x2.empty()) return x1.is_zero() ? RatCode{} : x1;

  Natural q = x1.denominator() * x2.denominator();
  Natural p1 = x1.numerator() * x2.denominator();
  Natural p2 = x2.numerator() * x1.denominator();

  Natural whole, frac;
  Sign sign = x1.sign();
  if (x1.sign() == x2.sign()) {
    frac = p1 + p2;
    whole = x1.whole() + x2.whole();
    if (frac >= q) {
      frac -= q;
      whole += Natural(1);
    }
  } else {
    // x1 + x2 = s1 * (I + D/q) with I = K1 - K2 and D = p1 - p2, |D| < q.
    Signed i = add_signed({false, x1.whole()}, {true, x2.whole()});
    Signed d = add_signed({false, p1}, {true, p2});
    bool opposite = !i.magnitude.is_zero() && !d.magnitude.is_zero() && i.negative != d.negative;
    bool negative = i.magnitude.is_zero() ? d.negative : i.negative;
    if (opposite) {
      whole = i.magnitude - Natural(1);
      frac = q - d.magnitude;
    } else {
      whole = std::move(i.magnitude);
      frac = std::move(d.magnitude);
    }
    if (negative) sign = flip(sign);
  }
  if (whole.is_zero() && frac.is_zero()) return {};
  return RatCode(sign, std::move(whole), std::move(frac), std::move(q));
}

RatCode rat_sub(const RatCode& x1, const RatCode& x2) { return rat_add(x1, rat_negate(x2)); }

RatCode rat_negate(const RatCode& x) {
  if (x.empty()) return {};
  return RatCode(flip(x.sign()), x.whole(), x.numerator(), x.denominator());
}

bool rat_equal(const RatCode& x1, const RatCode& x2) {
  if (x1.is_zero() || x2.is_zero()) return x1.is_zero() && x2.is_zero();
  if (x1.sign() != x2.sign()) return false;
  Natural lhs = (x1.whole() * x1.denominator() + x1.numerator()) * x2.denominator();
  Natural rhs = (x2.whole() * x2.denominator() + x2.numerator()) * x1.denominator();
  return lhs == rhs;
}

std::size_t rat_size(const RatCode& x) {
  if (x.empty()) return 0;
  return x.whole().bit_length() + 2 * x.denominator().bit_length() + 3;
}

IntCode IntDomain::scale(const IntCode& a, std::uint64_t factor) {
  if (a.is_zero() || factor == 0) return {};
  return IntCode(a.sign(), a.magnitude().mul_small(factor));
}

RatCode RatDomain::scale(const RatCode& a, std::uint64_t factor) {
  if (a.is_zero() || factor == 0) return {};
  // c(K + m/n) = cK + q + r/n with q = floor(cm/n) < c.
  Natural cm = a.numerator().mul_small(factor);
  std::uint64_t lo = 0, hi = factor - 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (a.denominator().mul_small(mid) <= cm)
      lo = mid;
    else
      hi = mid - 1;
  }
  Natural rem = cm - a.denominator().mul_small(lo);
  return RatCode(a.sign(), a.whole().mul_small(factor) + Natural(lo), std::move(rem),
                 a.denominator());
}

IntCode parse_int_coeff(std::string_view text) {
  if (text == "0") return {};
  if (text.empty()) throw ParseError("empty integer coefficient");
  Sign s = Sign::plus;
  std::string_view digits = text;
  if (text.front() == '+' || text.front() == '-') {
    s = parse_sign(text.front());
    digits.remove_prefix(1);
  }
  if (!is_decimal_natural(digits) || digits == "0")
    throw ParseError("malformed integer coefficient '" + std::string(text) + "'");
  return IntCode(s, Natural::from_decimal(digits));
}

RatCode parse_rat_coeff(std::string_view text) {
  if (text == "0") return {};
  const std::string quoted = "'" + std::string(text) + "'";
  if (text.empty() || (text.front() != '+' && text.front() != '-'))
    throw ParseError("rational coefficient needs a sign: " + quoted);
  Sign s = parse_sign(text.front());
  std::string_view body = text.substr(1);
  auto a = body.find('/');
  auto b = a == std::string_view::npos ? a : body.find('/', a + 1);
  if (b == std::string_view::npos) throw ParseError("rational coefficient needs K/m/n: " + quoted);
  std::string_view k = body.substr(0, a), m = body.substr(a + 1, b - a - 1), n = body.substr(b + 1);
  if (!is_decimal_natural(k) || !is_decimal_natural(m) || !is_decimal_natural(n))
    throw ParseError("malformed rational coefficient " + quoted);
  Natural nk = Natural::from_decimal(k), nm = Natural::from_decimal(m), nn = Natural::from_decimal(n);
  if (nn.is_zero()) throw ParseError("zero denominator in " + quoted);
  if (nm >= nn) throw ParseError("numerator not below denominator in " + quoted);
  return RatCode(s, std::move(nk), std::move(nm), std::move(nn));
}

std::string format_coeff(const IntCode& x) {
  if (x.is_zero()) return "0";
  return (x.sign() == Sign::minus ? "-" : "") + x.magnitude().to_decimal();
}

std::string format_coeff(const RatCode& x) {
  if (x.is_zero()) return "0";
  return sign_char(x.sign()) + x.whole().to_decimal() + '/' + x.numerator().to_decimal() + '/' +
         x.denominator().to_decimal();
}

std::variant<IntCode, RatCode> parse_coeff(std::string_view text, CoeffKind kind) {
  if (kind == CoeffKind::integer) return parse_int_coeff(text);
  return parse_rat_coeff(text);
}

}  // namespace qm
