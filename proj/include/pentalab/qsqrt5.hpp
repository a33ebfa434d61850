#ifndef PENTALAB_QSQRT5_HPP
#define PENTALAB_QSQRT5_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pentalab {

/// Arbitrary-precision rational. GMP keeps every mpq_class result in
/// canonical form (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;

/// Parses `p`, `p/q`, or a decimal such as `-0.25` / `1.5e-3` into an exact
/// rational. Throws std::invalid_argument on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Prints `p` when the denominator is 1, `p/q` otherwise.
std::string format_rational(const Rational& value);

/// Raised by exact division when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(sqrt5)") {}
};

/// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
///
/// Both components are canonical rationals, so two elements are equal iff
/// their components are equal.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(long value) : a_(value), b_(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(Rational a) : a_(std::move(a)), b_(0) { a_.canonicalize(); }  // NOLINT
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QSqrt5 sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// a - b*sqrt(5).
  QSqrt5 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2; zero only for the zero element.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  /// 1/(a+b*sqrt5) = (a-b*sqrt5)/(a^2-5b^2). Throws DivisionByZero for 0.
  QSqrt5 inverse() const;

  /// Sign of the real number a + b*sqrt(5), decided exactly.
  int sign() const;

  /// Nearest double; uses the conjugate form when a and b*sqrt5 cancel.
  double to_double() const;

  QSqrt5& operator+=(const QSqrt5& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt5& operator-=(const QSqrt5& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o) { return *this *= o.inverse(); }

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  friend QSqrt5 operator-(const QSqrt5& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }

  /// Literal form: `p/q`, `p/q*s5`, or `p/q+r/s*s5` (no whitespace).
  std::string to_string() const;
  /// Inverse of to_string(); also accepts integers, decimals, `s5`, `-s5`.
  /// Throws std::invalid_argument on malformed text.
  static QSqrt5 parse(std::string_view text);

  std::size_t hash() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Exact golden ratio (1+sqrt5)/2 and its conjugate (1-sqrt5)/2 = -1/phi.
struct GoldenPair {
  QSqrt5 phi;
  QSqrt5 psi;
};
GoldenPair golden_constants();

}  // namespace pentalab

template <>
struct std::hash<pentalab::QSqrt5> {
  std::size_t operator()(const pentalab::QSqrt5& x) const { return x.hash(); }
};

#endif  // PENTALAB_QSQRT5_HPP
