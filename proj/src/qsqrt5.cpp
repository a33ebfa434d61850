#include "pentalab/qsqrt5.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace pentalab {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("malformed scalar literal '" + std::string(text) + "'");
}

// [sign]digits[.digits][(e|E)[sign]digits]
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_literal(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) bad_literal(text);
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) bad_literal(text);
  mpz_class n(std::string(num_digits), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (num[0] == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {a_ / n, -b_ / n};
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  // (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

int QSqrt5::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  int cmp = ::cmp(Rational(a_ * a_), Rational(5 * b_ * b_));
  return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

double QSqrt5::to_double() const {
  static const double kSqrt5 = std::sqrt(5.0);
  const double a = a_.get_d();
  const double b = b_.get_d();
  if (sgn(a_) * sgn(b_) >= 0) return a + b * kSqrt5;
  // a + b s = (a^2 - 5 b^2) / (a - b s); the denominator has no cancellation.
  return norm().get_d() / (a - b * kSqrt5);
}

std::string QSqrt5::to_string() const {
  if (is_rational()) return format_rational(a_);
  std::string out;
  if (sgn(a_) != 0) {
    out = format_rational(a_);
    if (sgn(b_) > 0) out += '+';
  }
  if (b_ == 1) {
    out += "s5";
  } else if (b_ == -1) {
    out += "-s5";
  } else {
    out += format_rational(b_);
    out += "*s5";
  }
  return out;
}

QSqrt5 QSqrt5::parse(std::string_view text) {
  if (text.empty()) bad_literal(text);
  constexpr std::string_view kRoot = "s5";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    return {parse_rational(text), Rational(0)};
  }
  std::string_view head = text.substr(0, text.size() - kRoot.size());
  bool explicit_coefficient = false;
  if (!head.empty() && head.back() == '*') {
    head.remove_suffix(1);
    explicit_coefficient = true;
  }
  // Split at the last sign that starts the sqrt5 coefficient (not an exponent sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view rational_text;
  std::string_view coeff_text = head;
  if (split != std::string_view::npos) {
    rational_text = head.substr(0, split);
    coeff_text = head.substr(split);
  }
  Rational b;
  if (coeff_text.empty() || coeff_text == "+" || coeff_text == "-") {
    if (explicit_coefficient) bad_literal(text);
    b = coeff_text == "-" ? -1 : 1;
  } else {
    if (!explicit_coefficient) bad_literal(text);
    std::string_view c = coeff_text;
    if (c[0] == '+') c.remove_prefix(1);
    b = parse_rational(c);
  }
  Rational a = rational_text.empty() ? Rational(0) : parse_rational(rational_text);
  return {a, b};
}

std::size_t QSqrt5::hash() const {
  std::hash<std::string> h;
  return h(to_string());
}

GoldenPair golden_constants() {
  const Rational half(1, 2);
  return {QSqrt5(half, half), QSqrt5(half, Rational(-half))};
}

}  // namespace pentalab
