#ifndef PENTALAB_MODULI_HPP
#define PENTALAB_MODULI_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pentalab/hlambda.hpp"

namespace pentalab {

/// Permutation of pentagon labels: relabel(p, s)[k] = p[s[k]].
using Relabeling = std::array<int, 5>;

template <Scalar T>
Polygon<T> relabel(const Polygon<T>& p, const Relabeling& s) {
  if (p.size() != 5) throw std::invalid_argument("relabel expects a pentagon");
  std::vector<HPoint<T>> out;
  out.reserve(5);
  for (int k : s) out.push_back(p[static_cast<std::size_t>(k)]);
  return Polygon<T>(std::move(out));
}

/// The 10 symmetries of the labeled cycle: k -> r + s k (mod 5), s = +-1.
std::vector<Relabeling> dihedral_relabelings();
/// Dihedral relabelings composed with the star order k -> 2k (mod 5).
std::vector<Relabeling> star_relabelings();
/// k -> 2k (mod 5).
Relabeling star_order();
std::string to_string(const Relabeling& s);

/// Standard-chart coordinates of a labeled pentagon: the frame of v0..v3 is
/// moved to (e1, e2, e3, (1:1:1)) and v4 lands on `fifth` = (x : y : z).
template <Scalar T>
struct ModuliPoint {
  T x{};
  T y{};
  bool chart_ok = false;  // z != 0, so (x, y) is meaningful
  HPoint<T> fifth{T(0), T(0), T(1)};
};

template <Scalar T>
std::array<HPoint<T>, 4> standard_frame() {
  return {e1<T>(), e2<T>(), e3<T>(), unit_point<T>()};
}

template <Scalar T>
ModuliPoint<T> moduli_coords(const Polygon<T>& p, double tol = kDegenerateThreshold) {
  if (p.size() != 5) throw std::invalid_argument("moduli coordinates need a pentagon");
  const ProjMap<T> to_standard = frame_map(p[0], p[1], p[2], p[3], tol).inverse();
  HPoint<T> w = to_standard(p[4]);
  ModuliPoint<T> m;
  m.chart_ok = !detail::negligible(w[2], detail::max_norm(w.coords()), tol);
  if (m.chart_ok) {
    m.x = w[0] / w[2];
    m.y = w[1] / w[2];
  }
  m.fifth = std::move(w);
  return m;
}

/// The pentagon (e1, e2, e3, (1:1:1), fifth) projectively equivalent to p.
template <Scalar T>
Polygon<T> frame_normalized(const Polygon<T>& p, double tol = kDegenerateThreshold) {
  ModuliPoint<T> m = moduli_coords(p, tol);
  const auto f = standard_frame<T>();
  return Polygon<T>({f[0], f[1], f[2], f[3], m.fifth});
}

/// True iff the map carrying p0..p3 to q0..q3 also carries p4 to q4.
template <Scalar T>
bool equivalent(const Polygon<T>& p, const Polygon<T>& q, double tol = kEquivalenceTolerance,
                double degenerate_tol = kDegenerateThreshold) {
  if (p.size() != 5 || q.size() != 5) throw std::invalid_argument("equivalence test needs pentagons");
  const std::array<HPoint<T>, 4> src{p[0], p[1], p[2], p[3]};
  const std::array<HPoint<T>, 4> dst{q[0], q[1], q[2], q[3]};
  const ProjMap<T> t = transfer_map<T>(src, dst, degenerate_tol);
  return coincident(t(p[4]), q[4], tol);
}

template <Scalar T>
struct ReferencePentagons {
  Polygon<T> regular;
  Polygon<T> star;
};

/// Exact chart point of the regular class: (phi^2 : phi : 1) = (phi+1 : phi : 1).
inline HPoint<QSqrt5> exact_regular_fifth_vertex() {
  const QSqrt5 phi = golden_constants().phi;
  return {phi + QSqrt5(1), phi, QSqrt5(1)};
}

/// Float model: the Euclidean pentagon and pentagram. Exact model: the
/// regular class in the standard chart, and its k -> 2k relabeling.
template <Scalar T>
ReferencePentagons<T> reference_pentagons() {
  if constexpr (is_exact_v<T>) {
    const auto f = standard_frame<T>();
    Polygon<T> reg({f[0], f[1], f[2], f[3], exact_regular_fifth_vertex()});
    Polygon<T> star = relabel(reg, star_order());
    return {std::move(reg), std::move(star)};
  } else {
    std::vector<HPoint<T>> reg, star;
    for (int k = 0; k < 5; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 5.0;
      const double b = 2.0 * std::numbers::pi * ((2 * k) % 5) / 5.0;
      reg.push_back(HPoint<T>::affine(std::cos(a), std::sin(a)));
      star.push_back(HPoint<T>::affine(std::cos(b), std::sin(b)));
    }
    return {Polygon<T>(std::move(reg)), Polygon<T>(std::move(star))};
  }
}

enum class ShapeClass { Regular, StarRegular, Other };

inline const char* to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::Regular:
      return "Regular";
    case ShapeClass::StarRegular:
      return "StarRegular";
    case ShapeClass::Other:
      return "Other";
  }
  return "?";
}

struct PentagonClass {
  ShapeClass kind = ShapeClass::Other;
  std::optional<Relabeling> relabeling;  // the matching relabeling for `kind`
  std::optional<Relabeling> regular_match;
  std::optional<Relabeling> star_match;
};

/// Regular if some dihedral relabeling of p is equivalent to the regular
/// reference; StarRegular if some star-order relabeling is. Both matches are
/// searched and reported; Regular takes precedence for `kind`.
template <Scalar T>
PentagonClass classify(const Polygon<T>& p, double tol = kEquivalenceTolerance,
                       double degenerate_tol = kDegenerateThreshold) {
  if (p.size() != 5) throw std::invalid_argument("classify expects a pentagon");
  if (!p.valid_for_iteration(degenerate_tol)) {
    throw DegenerateError("pentagon has a degenerate 4-window");
  }
  const Polygon<T> ref = reference_pentagons<T>().regular;
  PentagonClass out;
  for (const Relabeling& s : dihedral_relabelings()) {
    if (equivalent(relabel(p, s), ref, tol, degenerate_tol)) {
      out.regular_match = s;
      break;
    }
  }
  for (const Relabeling& s : star_relabelings()) {
    if (equivalent(relabel(p, s), ref, tol, degenerate_tol)) {
      out.star_match = s;
      break;
    }
  }
  if (out.regular_match) {
    out.kind = ShapeClass::Regular;
    out.relabeling = out.regular_match;
  } else if (out.star_match) {
    out.kind = ShapeClass::StarRegular;
    out.relabeling = out.star_match;
  }
  return out;
}

/// Distance of a float pentagon from the regular class: the minimum over the
/// dihedral relabelings of the chordal distance between the fifth vertex,
/// carried by the frame transfer onto the reference, and the reference fifth
/// vertex. 0 iff regular; +inf when a frame is degenerate.
double residual_to_regular(const Polygon<double>& p, double degenerate_tol = kDegenerateThreshold);

/// Same unlabeled set of projective points (a bijection of coincident pairs).
template <Scalar T>
bool same_vertex_set(const Polygon<T>& a, const Polygon<T>& b, double tol = kEquivalenceTolerance) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& v : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && coincident(v, b[j], tol)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace pentalab

#endif  // PENTALAB_MODULI_HPP
