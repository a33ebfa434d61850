#ifndef PENTALAB_POLYGON_IO_HPP
#define PENTALAB_POLYGON_IO_HPP

#include <array>
#include <charconv>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pentalab/hlambda.hpp"
#include "pentalab/julia.hpp"

namespace pentalab {

enum class FieldModel { Exact, Float };

const char* to_string(FieldModel f);
/// "exact" or "float"; throws ParseError otherwise.
FieldModel parse_field(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalar literal in the given model. Exact accepts `p/q+r/s*s5` and exact
/// decimals; float accepts decimals and evaluates exact literals.
template <Scalar T>
T parse_scalar(std::string_view text) {
  try {
    if constexpr (is_exact_v<T>) {
      return QSqrt5::parse(text);
    } else {
      double v = 0.0;
      const char* first = text.data();
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec == std::errc() && ptr == last) return v;
      return QSqrt5::parse(text).to_double();
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

template <Scalar T>
std::string format_scalar(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.to_string();
  } else {
    return format_double(x);
  }
}

/// `phi`, `psi`, `inf`, or a scalar literal.
template <Scalar T>
ProjParam<T> parse_lambda(std::string_view text) {
  if (text == "phi") return ProjParam<T>(golden<T>().first);
  if (text == "psi") return ProjParam<T>(golden<T>().second);
  if (text == "inf" || text == "infinity") return ProjParam<T>::infinity();
  return ProjParam<T>(parse_scalar<T>(text));
}

/// Line-oriented polygon file:
///
///     # comment
///     field exact
///     1 0 0
///     0 1 0
///     ...
///
/// One homogeneous triple per line; `#` starts a comment.
struct PolygonFile {
  FieldModel field = FieldModel::Exact;
  std::vector<std::array<std::string, 3>> rows;

  /// Converts the literals into model T. Throws ParseError.
  template <Scalar T>
  Polygon<T> polygon() const {
    std::vector<HPoint<T>> pts;
    pts.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Vec3<T> v{parse_scalar<T>(rows[i][0]), parse_scalar<T>(rows[i][1]),
                parse_scalar<T>(rows[i][2])};
      if (detail::all_zero(v)) {
        throw ParseError("vertex " + std::to_string(i) + " is (0, 0, 0)");
      }
      pts.emplace_back(std::move(v));
    }
    return Polygon<T>(std::move(pts));
  }
};

/// Throws ParseError with a line number on malformed text.
PolygonFile parse_polygon_file(std::string_view text);
/// Throws IoError if the file cannot be read, ParseError if malformed.
PolygonFile read_polygon_file(const std::filesystem::path& path);

/// Representative for display: z scaled to 1 when z != 0, otherwise the
/// model's canonical normalization.
template <Scalar T>
HPoint<T> display_form(const HPoint<T>& p) {
  if (detail::negligible(p[2], detail::max_norm(p.coords()), kDegenerateThreshold)) {
    return p.normalized();
  }
  const T inv = T(1) / p[2];
  return HPoint<T>(p[0] * inv, p[1] * inv, T(1));
}

template <Scalar T>
std::string format_point(const HPoint<T>& p) {
  const HPoint<T> d = display_form(p);
  return "(" + format_scalar(d[0]) + " : " + format_scalar(d[1]) + " : " + format_scalar(d[2]) + ")";
}

/// PolygonFile text for p; vertices are written as given.
template <Scalar T>
std::string format_polygon(const Polygon<T>& p, std::string_view comment = {}) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "field ";
  out += is_exact_v<T> ? "exact" : "float";
  out += '\n';
  for (const auto& v : p) {
    out += format_scalar(v[0]) + " " + format_scalar(v[1]) + " " + format_scalar(v[2]) + "\n";
  }
  return out;
}

}  // namespace pentalab

#endif  // PENTALAB_POLYGON_IO_HPP
