#ifndef PENTALAB_PROJECTIVE_HPP
#define PENTALAB_PROJECTIVE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "pentalab/scalar.hpp"

namespace pentalab {

/// A construction hit a degenerate configuration (coincident points,
/// coincident lines, collinear frame). `window()` is the index of the
/// polygon window that failed, or -1 outside polygon iterations.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what, int window = -1)
      : std::runtime_error(what), window_(window) {}
  int window() const { return window_; }

 private:
  int window_;
};

template <Scalar T>
using Vec3 = std::array<T, 3>;

namespace detail {

template <Scalar T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <Scalar T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(a, cross(b, c));
}

template <Scalar T>
double max_norm(const Vec3<T>& v) {
  double m = 0.0;
  for (const T& x : v) m = std::max(m, ScalarTraits<T>::magnitude(x));
  return m;
}

template <Scalar T>
bool all_zero(const Vec3<T>& v) {
  return ScalarTraits<T>::is_zero(v[0]) && ScalarTraits<T>::is_zero(v[1]) &&
         ScalarTraits<T>::is_zero(v[2]);
}

/// Exact zero in the exact model; |value| <= tol * scale in the float model.
template <Scalar T>
bool negligible(const T& value, double scale, double tol) {
  if constexpr (is_exact_v<T>) {
    return ScalarTraits<T>::is_zero(value);
  } else {
    return !(std::abs(value) > tol * scale);
  }
}

template <Scalar T>
bool negligible(const Vec3<T>& v, double scale, double tol) {
  if constexpr (is_exact_v<T>) {
    return all_zero(v);
  } else {
    return !(max_norm(v) > tol * scale);
  }
}

/// Canonical representative: exact points get their last nonzero coordinate
/// scaled to 1; float points get their largest-magnitude coordinate scaled to 1.
template <Scalar T>
Vec3<T> normalized(const Vec3<T>& v) {
  int pivot = -1;
  if constexpr (is_exact_v<T>) {
    for (int i = 2; i >= 0; --i) {
      if (!ScalarTraits<T>::is_zero(v[i])) {
        pivot = i;
        break;
      }
    }
  } else {
    double best = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(v[i]) > best) {
        best = std::abs(v[i]);
        pivot = i;
      }
    }
  }
  if (pivot < 0) return v;
  const T inv = T(1) / v[pivot];
  Vec3<T> out{v[0] * inv, v[1] * inv, v[2] * inv};
  out[pivot] = T(1);
  return out;
}

}  // namespace detail

struct PointTag {};
struct LineTag {};

/// Homogeneous triple identified up to nonzero scale. Instantiated as
/// HPoint (x:y:z) and HLine (l:m:n), the locus lx+my+nz = 0.
template <Scalar T, class Tag>
class Homogeneous {
 public:
  Homogeneous(T x, T y, T z) : Homogeneous(Vec3<T>{std::move(x), std::move(y), std::move(z)}) {}
  explicit Homogeneous(Vec3<T> coords) : c_(std::move(coords)) {
    if (detail::all_zero(c_)) throw std::invalid_argument("homogeneous triple is all zero");
    if constexpr (!is_exact_v<T>) {
      for (double x : c_) {
        if (!std::isfinite(x)) throw DegenerateError("non-finite homogeneous coordinate");
      }
    }
  }

  /// The affine point (x, y) lifted to (x : y : 1).
  static Homogeneous affine(T x, T y) { return Homogeneous(std::move(x), std::move(y), T(1)); }

  const Vec3<T>& coords() const { return c_; }
  const T& operator[](int i) const { return c_[i]; }

  Homogeneous scaled(const T& factor) const {
    return Homogeneous(Vec3<T>{c_[0] * factor, c_[1] * factor, c_[2] * factor});
  }
  Homogeneous normalized() const { return Homogeneous(detail::normalized(c_)); }

  /// Affine chart z = 1. Throws DegenerateError for ideal points.
  std::pair<T, T> dehomogenize() const {
    if (ScalarTraits<T>::is_zero(c_[2])) throw DegenerateError("point at infinity has no affine chart");
    return {c_[0] / c_[2], c_[1] / c_[2]};
  }

 private:
  Vec3<T> c_;
};

template <Scalar T>
using HPoint = Homogeneous<T, PointTag>;
template <Scalar T>
using HLine = Homogeneous<T, LineTag>;

template <Scalar T>
HPoint<T> e1() {
  return {T(1), T(0), T(0)};
}
template <Scalar T>
HPoint<T> e2() {
  return {T(0), T(1), T(0)};
}
template <Scalar T>
HPoint<T> e3() {
  return {T(0), T(0), T(1)};
}
/// Unit point (1:1:1), the fourth point of the standard frame.
template <Scalar T>
HPoint<T> unit_point() {
  return {T(1), T(1), T(1)};
}

/// Unit-sphere representative in the hemisphere of `reference` (float only).
inline Vec3<double> unit_towards(const Vec3<double>& v, const Vec3<double>& reference) {
  const double n = std::hypot(v[0], v[1], v[2]);
  Vec3<double> u{v[0] / n, v[1] / n, v[2] / n};
  if (detail::dot(u, reference) < 0) u = {-u[0], -u[1], -u[2]};
  return u;
}

/// Chordal distance between two projective points on the unit sphere, with
/// the first representative flipped to the hemisphere of the second.
inline double chordal_distance(const Vec3<double>& p, const Vec3<double>& q) {
  const double n = std::hypot(q[0], q[1], q[2]);
  const Vec3<double> uq{q[0] / n, q[1] / n, q[2] / n};
  const Vec3<double> up = unit_towards(p, uq);
  return std::hypot(up[0] - uq[0], up[1] - uq[1], up[2] - uq[2]);
}

/// Same projective object. Exact: the cross product vanishes. Float: chordal
/// distance of unit representatives below `tol`.
template <Scalar T, class Tag>
bool coincident(const Homogeneous<T, Tag>& a, const Homogeneous<T, Tag>& b,
                double tol = kEquivalenceTolerance) {
  if constexpr (is_exact_v<T>) {
    return detail::all_zero(detail::cross(a.coords(), b.coords()));
  } else {
    return chordal_distance(a.coords(), b.coords()) < tol;
  }
}

template <Scalar T>
bool incident(const HPoint<T>& p, const HLine<T>& l, double tol = kDegenerateThreshold) {
  return detail::negligible(detail::dot(p.coords(), l.coords()),
                            detail::max_norm(p.coords()) * detail::max_norm(l.coords()), tol);
}

/// Line through two distinct points.
template <Scalar T>
HLine<T> join(const HPoint<T>& p, const HPoint<T>& q, double tol = kDegenerateThreshold) {
  Vec3<T> l = detail::cross(p.coords(), q.coords());
  if (detail::negligible(l, detail::max_norm(p.coords()) * detail::max_norm(q.coords()), tol)) {
    throw DegenerateError("join of coincident points");
  }
  return HLine<T>(detail::normalized(l));
}

/// Intersection point of two distinct lines.
template <Scalar T>
HPoint<T> meet(const HLine<T>& l, const HLine<T>& m, double tol = kDegenerateThreshold) {
  Vec3<T> p = detail::cross(l.coords(), m.coords());
  if (detail::negligible(p, detail::max_norm(l.coords()) * detail::max_norm(m.coords()), tol)) {
    throw DegenerateError("meet of coincident lines");
  }
  return HPoint<T>(detail::normalized(p));
}

/// det[p q r] vanishes (float: relative to the product of row max-norms).
template <Scalar T>
bool collinear(const HPoint<T>& p, const HPoint<T>& q, const HPoint<T>& r,
               double tol = kDegenerateThreshold) {
  const double scale = detail::max_norm(p.coords()) * detail::max_norm(q.coords()) *
                       detail::max_norm(r.coords());
  return detail::negligible(detail::det3(p.coords(), q.coords(), r.coords()), scale, tol);
}

/// No three of the points are collinear.
template <Scalar T>
bool general_position(std::span<const HPoint<T>> points, double tol = kDegenerateThreshold) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(points[i], points[j], points[k], tol)) return false;
      }
    }
  }
  return true;
}

/// Invertible 3x3 matrix up to scale acting on points; lines transform by
/// the cofactor matrix (the inverse transpose up to scale).
template <Scalar T>
class ProjMap {
 public:
  using Matrix = std::array<std::array<T, 3>, 3>;

  explicit ProjMap(Matrix m, double tol = kDegenerateThreshold) : m_(std::move(m)) {
    double scale = 1.0;
    for (int c = 0; c < 3; ++c) scale *= detail::max_norm(column(c));
    if (detail::negligible(determinant(), scale, tol)) {
      throw DegenerateError("projective map is singular");
    }
  }

  static ProjMap identity() {
    return ProjMap(Matrix{{{T(1), T(0), T(0)}, {T(0), T(1), T(0)}, {T(0), T(0), T(1)}}});
  }

  static ProjMap from_columns(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2,
                              double tol = kDegenerateThreshold) {
    return ProjMap(Matrix{{{c0[0], c1[0], c2[0]}, {c0[1], c1[1], c2[1]}, {c0[2], c1[2], c2[2]}}},
                   tol);
  }

  const Matrix& matrix() const { return m_; }
  const T& operator()(int r, int c) const { return m_[r][c]; }

  Vec3<T> row(int r) const { return m_[r]; }
  Vec3<T> column(int c) const { return {m_[0][c], m_[1][c], m_[2][c]}; }

  T determinant() const { return detail::det3(row(0), row(1), row(2)); }

  /// Cofactor matrix C with C_ij = (-1)^(i+j) minor_ij; adj = C^T.
  Matrix cofactors() const {
    const Vec3<T> r0 = row(0), r1 = row(1), r2 = row(2);
    const Vec3<T> c0 = detail::cross(r1, r2);
    const Vec3<T> c1 = detail::cross(r2, r0);
    const Vec3<T> c2 = detail::cross(r0, r1);
    return Matrix{{{c0[0], c0[1], c0[2]}, {c1[0], c1[1], c1[2]}, {c2[0], c2[1], c2[2]}}};
  }

  /// The adjugate, which is the inverse up to the scale det.
  ProjMap inverse() const {
    const Matrix c = cofactors();
    Matrix adj{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) adj[i][j] = c[j][i];
    }
    return ProjMap(std::move(adj), 0.0);
  }

  HPoint<T> operator()(const HPoint<T>& p) const {
    return HPoint<T>(detail::normalized(multiply(m_, p.coords())));
  }

  HLine<T> operator()(const HLine<T>& l) const {
    return HLine<T>(detail::normalized(multiply(cofactors(), l.coords())));
  }

  friend ProjMap operator*(const ProjMap& a, const ProjMap& b) {
    Matrix out{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        out[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
      }
    }
    return ProjMap(std::move(out), 0.0);
  }

 private:
  static Vec3<T> multiply(const Matrix& m, const Vec3<T>& v) {
    return {detail::dot(m[0], v), detail::dot(m[1], v), detail::dot(m[2], v)};
  }

  Matrix m_;
};

/// Two matrices denote the same map: all 2x2 "ratios" m_ij n_kl - m_kl n_ij vanish.
template <Scalar T>
bool same_map(const ProjMap<T>& a, const ProjMap<T>& b, double tol = kEquivalenceTolerance) {
  if constexpr (is_exact_v<T>) {
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        const T lhs = a(i / 3, i % 3) * b(j / 3, j % 3);
        const T rhs = a(j / 3, j % 3) * b(i / 3, i % 3);
        if (lhs != rhs) return false;
      }
    }
    return true;
  } else {
    double na = 0.0, nb = 0.0, dot = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        na += a(i, j) * a(i, j);
        nb += b(i, j) * b(i, j);
        dot += a(i, j) * b(i, j);
      }
    }
    const double cos = std::abs(dot) / std::sqrt(na * nb);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * cos)) < tol;
  }
}

/// M with M e1 ~ p0, M e2 ~ p1, M e3 ~ p2, M (1:1:1) ~ p3. The columns are
/// alpha p0, beta p1, gamma p2 where alpha p0 + beta p1 + gamma p2 = p3;
/// Cramer's rule is used without the common 1/det factor.
template <Scalar T>
ProjMap<T> frame_map(const HPoint<T>& p0, const HPoint<T>& p1, const HPoint<T>& p2,
                     const HPoint<T>& p3, double tol = kDegenerateThreshold) {
  const std::array<HPoint<T>, 4> pts{p0, p1, p2, p3};
  if (!general_position(std::span<const HPoint<T>>(pts), tol)) {
    throw DegenerateError("frame points are not in general position");
  }
  const Vec3<T>& a = p0.coords();
  const Vec3<T>& b = p1.coords();
  const Vec3<T>& c = p2.coords();
  const Vec3<T>& d = p3.coords();
  const T alpha = detail::det3(d, b, c);
  const T beta = detail::det3(a, d, c);
  const T gamma = detail::det3(a, b, d);
  auto scale = [](const Vec3<T>& v, const T& s) { return Vec3<T>{v[0] * s, v[1] * s, v[2] * s}; };
  return ProjMap<T>::from_columns(scale(a, alpha), scale(b, beta), scale(c, gamma), 0.0);
}

template <Scalar T>
ProjMap<T> frame_map(std::span<const HPoint<T>, 4> q, double tol = kDegenerateThreshold) {
  return frame_map(q[0], q[1], q[2], q[3], tol);
}

/// The projective map carrying src[i] to dst[i] for i = 0..3.
template <Scalar T>
ProjMap<T> transfer_map(std::span<const HPoint<T>, 4> src, std::span<const HPoint<T>, 4> dst,
                        double tol = kDegenerateThreshold) {
  return frame_map(dst, tol) * frame_map(src, tol).inverse();
}

/// Cross-ratio CR(a,b;c,d) = det(a,c) det(b,d) / (det(a,d) det(b,c)) of four
/// collinear points, with 2x2 determinants taken in the coordinate pair where
/// the supporting line projects best. Equals ((a-c)(b-d))/((a-d)(b-c)) in an
/// affine chart. Returns inf for a zero denominator; throws DegenerateError
/// for 0/0 or non-collinear input.
template <Scalar T>
ProjParam<T> cross_ratio(const HPoint<T>& a, const HPoint<T>& b, const HPoint<T>& c,
                         const HPoint<T>& d, double tol = kDegenerateThreshold) {
  const std::array<const HPoint<T>*, 4> pts{&a, &b, &c, &d};
  // Supporting line: first pair of distinct points.
  std::optional<Vec3<T>> line;
  for (int i = 0; i < 4 && !line; ++i) {
    for (int j = i + 1; j < 4 && !line; ++j) {
      Vec3<T> l = detail::cross(pts[i]->coords(), pts[j]->coords());
      const double s = detail::max_norm(pts[i]->coords()) * detail::max_norm(pts[j]->coords());
      if (!detail::negligible(l, s, tol)) line = std::move(l);
    }
  }
  if (!line) throw DegenerateError("cross-ratio of a single repeated point");
  for (const HPoint<T>* p : pts) {
    if (!detail::negligible(detail::dot(*line, p->coords()),
                            detail::max_norm(*line) * detail::max_norm(p->coords()), tol)) {
      throw DegenerateError("cross-ratio of non-collinear points");
    }
  }
  // Dropping coordinate k leaves a 2x2 minor equal to +-line[k]; pick the largest.
  int drop = 0;
  for (int k = 1; k < 3; ++k) {
    if (ScalarTraits<T>::magnitude((*line)[k]) > ScalarTraits<T>::magnitude((*line)[drop])) drop = k;
  }
  const int i0 = drop == 0 ? 1 : 0;
  const int i1 = drop == 2 ? 1 : 2;
  auto det2 = [&](const HPoint<T>& x, const HPoint<T>& y) {
    return x[i0] * y[i1] - x[i1] * y[i0];
  };
  const T num = det2(a, c) * det2(b, d);
  const T den = det2(a, d) * det2(b, c);
  double scale = 1.0;
  for (const HPoint<T>* p : pts) scale *= detail::max_norm(p->coords());
  const bool num_zero = detail::negligible(num, scale, tol);
  const bool den_zero = detail::negligible(den, scale, tol);
  if (den_zero) {
    if (num_zero) throw DegenerateError("cross-ratio is 0/0 (too many coincident points)");
    return ProjParam<T>::infinity();
  }
  return ProjParam<T>(num / den);
}

}  // namespace pentalab

#endif  // PENTALAB_PROJECTIVE_HPP
