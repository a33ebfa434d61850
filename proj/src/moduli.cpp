#include "pentalab/moduli.hpp"

#include <sstream>

namespace pentalab {

std::vector<Relabeling> dihedral_relabelings() {
  std::vector<Relabeling> out;
  out.reserve(10);
  for (int r = 0; r < 5; ++r) {
    for (int s : {1, -1}) {
      Relabeling sigma{};
      for (int k = 0; k < 5; ++k) sigma[k] = ((r + s * k) % 5 + 5) % 5;
      out.push_back(sigma);
    }
  }
  return out;
}

Relabeling star_order() { return {0, 2, 4, 1, 3}; }

std::vector<Relabeling> star_relabelings() {
  std::vector<Relabeling> out;
  out.reserve(10);
  for (const Relabeling& d : dihedral_relabelings()) {
    Relabeling sigma{};
    for (int k = 0; k < 5; ++k) sigma[k] = d[(2 * k) % 5];
    out.push_back(sigma);
  }
  return out;
}

std::string to_string(const Relabeling& s) {
  std::ostringstream os;
  os << '[';
  for (int k = 0; k < 5; ++k) os << (k ? "," : "") << s[k];
  os << ']';
  return os.str();
}

double residual_to_regular(const Polygon<double>& p, double degenerate_tol) {
  static const Polygon<double> ref = reference_pentagons<double>().regular;
  static const std::array<HPoint<double>, 4> ref_frame{ref[0], ref[1], ref[2], ref[3]};
  static const ProjMap<double> ref_map = frame_map<double>(ref_frame);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (p.size() != 5) throw std::invalid_argument("residual_to_regular expects a pentagon");
  double best = kInf;
  try {
    for (const Relabeling& s : dihedral_relabelings()) {
      const Polygon<double> q = relabel(p, s);
      const ProjMap<double> t = ref_map * frame_map(q[0], q[1], q[2], q[3], degenerate_tol).inverse();
      const Vec3<double>& v = q[4].coords();
      const Vec3<double> w{detail::dot(t.row(0), v), detail::dot(t.row(1), v),
                           detail::dot(t.row(2), v)};
      const double d = chordal_distance(w, ref[4].coords());
      if (!std::isfinite(d)) return kInf;
      best = std::min(best, d);
    }
  } catch (const DegenerateError&) {
    return kInf;
  }
  return best;
}

}  // namespace pentalab
