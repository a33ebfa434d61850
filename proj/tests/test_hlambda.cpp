#include <doctest.h>

#include <string>

#include "pentalab/hlambda.hpp"
#include "pentalab/moduli.hpp"
#include "test_support.hpp"

using namespace pentalab;
using namespace pentalab::testing;

namespace {

using P = HPoint<Exact>;

P pt(const Exact& x, const Exact& y, const Exact& z) { return P(x, y, z); }
Exact rat(long n, long d) { return Exact(Rational(mpz_class(n), mpz_class(d))); }

ProjParam<Exact> lam(long n, long d = 1) { return ProjParam<Exact>(rat(n, d)); }
const ProjParam<Exact> kInf = ProjParam<Exact>::infinity();

Polygon<Exact> frame_pentagon(long x, long y) {
  return Polygon<Exact>({e1<Exact>(), e2<Exact>(), e3<Exact>(), unit_point<Exact>(), pt(Exact(x), Exact(y), Exact(1))});
}

template <Scalar T>
Polygon<T> rotate(const Polygon<T>& p, long by) {
  std::vector<HPoint<T>> v;
  for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.at_cyclic(static_cast<long>(i) + by));
  return Polygon<T>(std::move(v));
}

template <Scalar T>
bool same_polygon(const Polygon<T>& a, const Polygon<T>& b, double tol = kEquivalenceTolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!coincident(a[i], b[i], tol)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("diagonal frame of the reference quadruple") {
  const auto q = reference_quad();
  const DiagFrame<Exact> f = diag_frame(q[0], q[1], q[2], q[3]);
  CHECK(coincident(f.P, exact_affine(-23, 22, 15, 11)));
  CHECK(coincident(f.Q, exact_affine(-2, 19, 92, 19)));
  CHECK(coincident(f.H, exact_affine(-16, 21, 152, 63)));
  CHECK(collinear(f.P, f.Q, f.H));
}

TEST_CASE("diagonal frame of the standard frame") {
  const DiagFrame<Exact> f = diag_frame(e1<Exact>(), e2<Exact>(), e3<Exact>(), unit_point<Exact>());
  CHECK(coincident(f.P, pt(Exact(1), Exact(0), Exact(1))));
  CHECK(coincident(f.Q, pt(Exact(1), Exact(1), Exact(0))));
  CHECK(coincident(f.H, pt(Exact(0), Exact(-1), Exact(1))));
}

TEST_CASE("diagonal frame names the collinear triple") {
  const P a = e1<Exact>(), b = e2<Exact>(), c = pt(Exact(1), Exact(1), Exact(0)), d = unit_point<Exact>();
  try {
    (void)diag_frame(a, b, c, d);
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(std::string(e.what()).find("A,B,C") != std::string::npos);
  }
  try {
    (void)diag_frame(a, d, b, c);
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(std::string(e.what()).find("A,C,D") != std::string::npos);
  }
}

TEST_CASE("h_lambda on the reference quadruple") {
  const auto q = reference_quad();
  const auto s = std::span<const P, 4>(q);
  const DiagFrame<Exact> f = diag_frame(q[0], q[1], q[2], q[3]);
  CHECK(coincident(h_lambda(s, lam(0)), f.P));
  CHECK(coincident(h_lambda(s, lam(1)), f.H));
  CHECK(coincident(h_lambda(s, kInf), f.Q));
  const P h2 = h_lambda(s, lam(2));
  CHECK(coincident(h2, exact_affine(-25, 41, 122, 41)));
  CHECK(h2.dehomogenize() == std::pair{rat(-25, 41), rat(122, 41)});
}

TEST_CASE("h_lambda closed form on the standard frame") {
  const auto frame = std::array{e1<Exact>(), e2<Exact>(), e3<Exact>(), unit_point<Exact>()};
  const auto s = std::span<const P, 4>(frame);
  const auto [phi, psi] = golden_constants();
  for (const Exact& l : {Exact(0), Exact(1), Exact(2), rat(-3, 7), phi, psi, Exact(5, -2)}) {
    CAPTURE(l.to_string());
    CHECK(coincident(h_lambda(s, ProjParam<Exact>(l)), pt(Exact(1) - l, -l, Exact(1))));
  }
  CHECK(coincident(h_lambda(s, kInf), pt(Exact(1), Exact(1), Exact(0))));
}

TEST_CASE("h_lambda propagates degeneracy") {
  CHECK_THROWS_AS((void)h_lambda(e1<Exact>(), e2<Exact>(), pt(Exact(1), Exact(1), Exact(0)), unit_point<Exact>(), lam(2)),
                  DegenerateError);
}

TEST_CASE("anchor property on random quadruples") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto q = rand_exact_quad(rng);
    const auto s = std::span<const P, 4>(q);
    const Exact l = rand_qs5(rng);
    const DiagFrame<Exact> f = diag_frame(q[0], q[1], q[2], q[3]);
    CHECK(cross_ratio(h_lambda(s, ProjParam<Exact>(l)), f.H, f.P, f.Q) == ProjParam<Exact>(l));
  }
}

TEST_CASE("h_lambda is natural") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto q = rand_exact_quad(rng);
    const ProjMap<Exact> m = rand_exact_map(rng);
    const std::array<P, 4> mq{m(q[0]), m(q[1]), m(q[2]), m(q[3])};
    const ProjParam<Exact> l = i % 10 == 0 ? kInf : ProjParam<Exact>(rand_qs5(rng));
    CHECK(coincident(h_lambda(std::span<const P, 4>(mq), l), m(h_lambda(std::span<const P, 4>(q), l))));
  }
}

TEST_CASE("float h_lambda agrees with exact") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const std::array<P, 4> q{rand_rational_point(rng), rand_rational_point(rng), rand_rational_point(rng),
                             rand_rational_point(rng)};
    if (!general_position(std::span<const P>(q))) continue;
    const std::array<HPoint<double>, 4> f{to_float(q[0]), to_float(q[1]), to_float(q[2]), to_float(q[3])};
    const Exact l = rand_qs5(rng);
    const P he = h_lambda(std::span<const P, 4>(q), ProjParam<Exact>(l));
    const HPoint<double> hf = h_lambda(std::span<const HPoint<double>, 4>(f), ProjParam<double>(l.to_double()));
    CHECK(chordal_distance(to_float(he).coords(), hf.coords()) <= 1e-9);
  }
}

TEST_CASE("iterate_once, pinned example") {
  const Polygon<Exact> out = iterate_once(frame_pentagon(3, 2), lam(1));
  REQUIRE(out.size() == 5);
  CHECK(coincident(out[0], pt(rat(3, 5), rat(3, 5), Exact(1))));
  CHECK(coincident(out[1], pt(rat(5, 3), rat(4, 3), Exact(1))));
  CHECK(coincident(out[2], pt(Exact(5), Exact(2), Exact(1))));
  CHECK(coincident(out[3], pt(rat(-3, 2), Exact(1), Exact(0))));
  CHECK(coincident(out[4], pt(Exact(0), Exact(-1), Exact(1))));
}

TEST_CASE("iterate_once at lambda = 0 is the pentagram map") {
  Rng rng(34);
  const Polygon<Exact> p = rand_exact_pentagon(rng);
  const Polygon<Exact> out = iterate_once(p, lam(0));
  for (long i = 0; i < 5; ++i) {
    // Vertex i comes from the window (v[i+1], ..., v[i+4]); its P is v[i+1]v[i+3] ^ v[i+2]v[i+4].
    const P expected = meet(join(p.at_cyclic(i + 1), p.at_cyclic(i + 3)), join(p.at_cyclic(i + 2), p.at_cyclic(i + 4)));
    CHECK(coincident(out[static_cast<std::size_t>(i)], expected));
  }
}

TEST_CASE("iterate_once on regular pentagons stays regular") {
  const auto phi = golden<double>().first;
  const Polygon<double> reg = reference_pentagons<double>().regular;
  CHECK(classify(iterate_once(reg, ProjParam<double>(phi))).kind == ShapeClass::Regular);
  const Polygon<Exact> ex = reference_pentagons<Exact>().regular;
  CHECK(classify(iterate_once(ex, ProjParam<Exact>(golden_constants().phi))).kind == ShapeClass::Regular);
}

TEST_CASE("iterate_once commutes with projective maps") {
  Rng rng(35);
  for (int i = 0; i < 50; ++i) {
    const Polygon<Exact> p = rand_exact_pentagon(rng);
    const ProjMap<Exact> m = rand_exact_map(rng);
    const ProjParam<Exact> l(rand_qs5(rng));
    try {
      CHECK(same_polygon(iterate_once(transform(m, p), l), transform(m, iterate_once(p, l))));
    } catch (const DegenerateError&) {
      // A random lambda can put an image vertex on a degenerate spot; skip.
    }
  }
}

TEST_CASE("iterate_once commutes with cyclic relabeling") {
  Rng rng(36);
  for (int i = 0; i < 50; ++i) {
    const Polygon<Exact> p = rand_exact_pentagon(rng);
    const ProjParam<Exact> l(rand_qs5(rng));
    const Polygon<Exact> img = iterate_once(p, l);
    for (long r = 1; r < 5; ++r) CHECK(same_polygon(iterate_once(rotate(p, r), l), rotate(img, r)));
    // Changing the window offset only rotates the labels.
    CHECK(same_polygon(iterate_once(p, l, kDefaultWindowOffset + 2), rotate(img, 2)));
  }
}

TEST_CASE("iterate_once reports the failing window") {
  // v4 = (1:2:0) lies on the line v0 v1; window 2 = (v3, v4, v0, v1) is the first to contain all three.
  const Polygon<Exact> p({e1<Exact>(), e2<Exact>(), e3<Exact>(), unit_point<Exact>(), pt(Exact(1), Exact(2), Exact(0))});
  try {
    (void)iterate_once(p, lam(1));
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(e.window() == 2);
    CHECK(std::string(e.what()).find("window 2") != std::string::npos);
  }
}

TEST_CASE("quadrilaterals and hexagons iterate") {
  const auto q = reference_quad();
  const Polygon<Exact> quad(std::vector<P>(q.begin(), q.end()));
  const Polygon<Exact> out = iterate_once(quad, lam(2));
  CHECK(out.size() == 4);
  // Window 0 is (B, C, D, A).
  CHECK(coincident(out[0], h_lambda(q[1], q[2], q[3], q[0], lam(2))));

  Rng rng(37);
  std::vector<P> hex;
  for (int k = 0; k < 6; ++k) hex.push_back(rand_rational_point(rng));
  const Polygon<Exact> h(hex);
  if (h.valid_for_iteration()) CHECK(iterate_once(h, lam(3)).size() == 6);
  CHECK_THROWS_AS(Polygon<Exact>(std::vector<P>(q.begin(), q.begin() + 3)), std::invalid_argument);
}

TEST_CASE("iterate") {
  Rng rng(38);
  const Polygon<Exact> p = rand_exact_pentagon(rng);
  const Trajectory<Exact> t0 = iterate(p, lam(1), 0);
  CHECK(t0.polygons.size() == 1);
  CHECK(same_polygon(t0.polygons[0], p));
  CHECK_FALSE(t0.error);

  const Trajectory<Exact> t = iterate(p, ProjParam<Exact>(golden_constants().phi), 3);
  REQUIRE(t.polygons.size() == 4);
  CHECK_FALSE(t.error);
  CHECK(classify(t.polygons[0]).kind == ShapeClass::Other);
  for (int k = 1; k <= 3; ++k) CHECK(classify(t.polygons[k]).kind == ShapeClass::Regular);
}

TEST_CASE("iterate stops with a partial trajectory") {
  // On a quadrilateral every window at lambda = 0 yields the same diagonal
  // point, so step 1 succeeds and step 2 collapses.
  const auto q = reference_quad();
  const Trajectory<Exact> t = iterate(Polygon<Exact>(std::vector<P>(q.begin(), q.end())), lam(0), 5);
  REQUIRE(t.polygons.size() == 2);
  REQUIRE(t.error);
  CHECK(t.error->step == 2);
  CHECK(t.error->window == 0);
  for (const auto& v : t.polygons[1]) CHECK(coincident(v, exact_affine(-23, 22, 15, 11)));
}

TEST_CASE("the star class is a fixed class that does not approach the regular one") {
  Polygon<Exact> p = reference_pentagons<Exact>().star;
  const ProjParam<Exact> l = lam(1, 5);
  for (int k = 0; k < 100; ++k) {
    p = frame_normalized(iterate_once(p, l));
    REQUIRE(classify(p).kind == ShapeClass::StarRegular);
    REQUIRE(residual_to_regular(to_float(p)) > 0.1);
  }
}

TEST_CASE("inserted vertex pentagon") {
  const Polygon<Exact> s = insert_vertex_pentagon(e1<Exact>(), e2<Exact>(), e3<Exact>(), unit_point<Exact>());
  const Exact phi = golden_constants().phi;
  CHECK(coincident(s[0], e1<Exact>()));
  CHECK(coincident(s[1], e2<Exact>()));
  CHECK(coincident(s[2], pt(Exact(1) - phi, -phi, Exact(1))));
  CHECK(coincident(s[3], e3<Exact>()));
  CHECK(coincident(s[4], unit_point<Exact>()));
  CHECK(classify(s).kind == ShapeClass::Regular);

  const auto q = reference_quad();
  CHECK(classify(insert_vertex_pentagon(q[0], q[1], q[2], q[3])).kind == ShapeClass::Regular);
  CHECK_THROWS_AS((void)insert_vertex_pentagon(e1<Exact>(), e2<Exact>(), pt(Exact(1), Exact(1), Exact(0)),
                                               unit_point<Exact>()),
                  DegenerateError);
}
