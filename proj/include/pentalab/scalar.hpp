#ifndef PENTALAB_SCALAR_HPP
#define PENTALAB_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "pentalab/qsqrt5.hpp"

namespace pentalab {

/// Collinearity / coincidence threshold for the floating-point model,
/// relative to the magnitudes of the inputs.
inline constexpr double kDegenerateThreshold = 1e-10;
/// Chordal tolerance for comparing unit-normalized float points.
inline constexpr double kEquivalenceTolerance = 1e-8;

/// Per-model behaviour the geometry templates rely on.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";
  static double magnitude(double x) { return std::abs(x); }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double from_exact(const QSqrt5& x) { return x.to_double(); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarTraits<QSqrt5> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "exact";
  static double magnitude(const QSqrt5& x) { return std::abs(x.to_double()); }
  static double to_double(const QSqrt5& x) { return x.to_double(); }
  static QSqrt5 from_rational(const Rational& r) { return QSqrt5(r); }
  static QSqrt5 from_exact(const QSqrt5& x) { return x; }
  static bool is_zero(const QSqrt5& x) { return x.is_zero(); }
};

/// A field model usable by the geometry templates: exact QSqrt5 or double.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { ScalarTraits<T>::magnitude(a) } -> std::convertible_to<double>;
  { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::kExact;

/// phi and psi in the chosen model.
template <Scalar T>
std::pair<T, T> golden() {
  const GoldenPair g = golden_constants();
  return {ScalarTraits<T>::from_exact(g.phi), ScalarTraits<T>::from_exact(g.psi)};
}

/// A point of the projective line R u {inf}: either a finite scalar or inf.
template <Scalar T>
class ProjParam {
 public:
  ProjParam(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static ProjParam infinity() { return ProjParam(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error for inf.
  const T& value() const {
    if (!value_) throw std::logic_error("ProjParam::value() on infinity");
    return *value_;
  }

  friend bool operator==(const ProjParam& x, const ProjParam& y) { return x.value_ == y.value_; }
  friend bool operator!=(const ProjParam& x, const ProjParam& y) { return !(x == y); }

 private:
  ProjParam() = default;
  std::optional<T> value_;
};

inline std::string to_string(const ProjParam<QSqrt5>& p) {
  return p.is_infinite() ? "inf" : p.value().to_string();
}

}  // namespace pentalab

#endif  // PENTALAB_SCALAR_HPP
