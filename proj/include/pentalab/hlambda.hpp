#ifndef PENTALAB_HLAMBDA_HPP
#define PENTALAB_HLAMBDA_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pentalab/projective.hpp"

namespace pentalab {

/// Diagonal frame of a quadruple A,B,C,D: P = AC^BD, Q = AB^CD, H = BC^PQ.
template <Scalar T>
struct DiagFrame {
  HPoint<T> P;
  HPoint<T> Q;
  HPoint<T> H;
};

/// Cyclically ordered, labeled vertices v0..v(n-1), n >= 4.
template <Scalar T>
class Polygon {
 public:
  explicit Polygon(std::vector<HPoint<T>> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 4) throw std::invalid_argument("polygon needs at least 4 vertices");
  }

  std::size_t size() const { return v_.size(); }
  const HPoint<T>& operator[](std::size_t i) const { return v_[i]; }
  /// Index taken mod n.
  const HPoint<T>& at_cyclic(long i) const {
    const long n = static_cast<long>(v_.size());
    return v_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  const std::vector<HPoint<T>>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  /// Every cyclic window of 4 consecutive vertices is in general position.
  bool valid_for_iteration(double tol = kDegenerateThreshold) const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const std::array<HPoint<T>, 4> w = window(static_cast<long>(i));
      if (!general_position(std::span<const HPoint<T>>(w), tol)) return false;
    }
    return true;
  }

  std::array<HPoint<T>, 4> window(long start) const {
    return {at_cyclic(start), at_cyclic(start + 1), at_cyclic(start + 2), at_cyclic(start + 3)};
  }

 private:
  std::vector<HPoint<T>> v_;
};

/// Image of every vertex under a projective map.
template <Scalar T>
Polygon<T> transform(const ProjMap<T>& m, const Polygon<T>& poly) {
  std::vector<HPoint<T>> out;
  out.reserve(poly.size());
  for (const auto& v : poly) out.push_back(m(v));
  return Polygon<T>(std::move(out));
}

template <Scalar T>
DiagFrame<T> diag_frame(const HPoint<T>& A, const HPoint<T>& B, const HPoint<T>& C,
                        const HPoint<T>& D, double tol = kDegenerateThreshold) {
  static constexpr std::array<const char*, 4> kTriples{"A,B,C", "A,B,D", "A,C,D", "B,C,D"};
  const std::array<const HPoint<T>*, 4> pts{&A, &B, &C, &D};
  static constexpr std::array<std::array<int, 3>, 4> kIdx{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (std::size_t t = 0; t < kIdx.size(); ++t) {
    const auto& [i, j, k] = kIdx[t];
    if (collinear(*pts[i], *pts[j], *pts[k], tol)) {
      throw DegenerateError(std::string("collinear triple ") + kTriples[t]);
    }
  }
  HPoint<T> P = meet(join(A, C, tol), join(B, D, tol), tol);
  HPoint<T> Q = meet(join(A, B, tol), join(C, D, tol), tol);
  HPoint<T> H = meet(join(B, C, tol), join(P, Q, tol), tol);
  return {std::move(P), std::move(Q), std::move(H)};
}

/// The point of line PQ at parameter lambda in the chart where P, H, Q sit at
/// 0, 1, inf: with lifts P^ + Q^ = H^ the result is P^ + lambda Q^.
template <Scalar T>
HPoint<T> h_lambda(const HPoint<T>& A, const HPoint<T>& B, const HPoint<T>& C, const HPoint<T>& D,
                   const ProjParam<T>& lambda, double tol = kDegenerateThreshold) {
  DiagFrame<T> f = diag_frame(A, B, C, D, tol);
  if (lambda.is_infinite()) return f.Q;
  const Vec3<T>& p = f.P.coords();
  const Vec3<T>& q = f.Q.coords();
  const Vec3<T>& h = f.H.coords();
  // Solve alpha p + beta q = h on the best-conditioned coordinate pair,
  // keeping alpha and beta scaled by the 2x2 determinant.
  int i0 = 0, i1 = 1;
  double best = -1.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const double m = ScalarTraits<T>::magnitude(p[a] * q[b] - p[b] * q[a]);
      if (m > best) {
        best = m;
        i0 = a;
        i1 = b;
      }
    }
  }
  const T alpha = h[i0] * q[i1] - h[i1] * q[i0];
  const T beta = p[i0] * h[i1] - p[i1] * h[i0];
  const T s = beta * lambda.value();
  Vec3<T> out{alpha * p[0] + s * q[0], alpha * p[1] + s * q[1], alpha * p[2] + s * q[2]};
  if (detail::all_zero(out)) throw DegenerateError("H_lambda lift vanished");
  return HPoint<T>(detail::normalized(out));
}

template <Scalar T>
HPoint<T> h_lambda(std::span<const HPoint<T>, 4> q, const ProjParam<T>& lambda,
                   double tol = kDegenerateThreshold) {
  return h_lambda(q[0], q[1], q[2], q[3], lambda, tol);
}

/// Windowing knob for the cyclic extension: vertex i of the image is built
/// from the window starting at i + offset. The pentagon labeling
/// A' = H(B,C,D,E) corresponds to offset 1.
inline constexpr int kDefaultWindowOffset = 1;

/// One step of the polygon iteration. Throws DegenerateError carrying the
/// index of the first failing window.
template <Scalar T>
Polygon<T> iterate_once(const Polygon<T>& poly, const ProjParam<T>& lambda,
                        int offset = kDefaultWindowOffset, double tol = kDegenerateThreshold) {
  std::vector<HPoint<T>> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const long start = static_cast<long>(i) + offset;
    const std::array<HPoint<T>, 4> w = poly.window(start);
    try {
      out.push_back(h_lambda(std::span<const HPoint<T>, 4>(w), lambda, tol));
    } catch (const DegenerateError& e) {
      const long n = static_cast<long>(poly.size());
      throw DegenerateError("window " + std::to_string(i) + " (vertices starting at " +
                                std::to_string(((start % n) + n) % n) + "): " + e.what(),
                            static_cast<int>(i));
    }
  }
  return Polygon<T>(std::move(out));
}

/// Record of where a trajectory stopped.
struct Degeneracy {
  std::size_t step;  // the step that failed (1-based: producing polygon `step`)
  int window;
  std::string reason;
};

template <Scalar T>
struct Trajectory {
  std::vector<Polygon<T>> polygons;  // includes the input
  std::optional<Degeneracy> error;
};

/// steps+1 polygons starting with the input, or a shorter prefix plus the
/// degeneracy that stopped it.
template <Scalar T>
Trajectory<T> iterate(const Polygon<T>& poly, const ProjParam<T>& lambda, std::size_t steps,
                      int offset = kDefaultWindowOffset, double tol = kDegenerateThreshold) {
  Trajectory<T> t;
  t.polygons.reserve(steps + 1);
  t.polygons.push_back(poly);
  for (std::size_t k = 1; k <= steps; ++k) {
    try {
      t.polygons.push_back(iterate_once(t.polygons.back(), lambda, offset, tol));
    } catch (const DegenerateError& e) {
      t.error = Degeneracy{k, e.window(), e.what()};
      break;
    }
  }
  return t;
}

/// The pentagon (A, B, H_phi(A,B,C,D), C, D).
template <Scalar T>
Polygon<T> insert_vertex_pentagon(const HPoint<T>& A, const HPoint<T>& B, const HPoint<T>& C,
                                  const HPoint<T>& D, double tol = kDegenerateThreshold) {
  const ProjParam<T> phi(golden<T>().first);
  return Polygon<T>({A, B, h_lambda(A, B, C, D, phi, tol), C, D});
}

}  // namespace pentalab

#endif  // PENTALAB_HLAMBDA_HPP
