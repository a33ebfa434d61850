#include <doctest.h>

#include <cmath>
#include <limits>
#include <unordered_set>

#include "pentalab/scalar.hpp"
#include "test_support.hpp"

using pentalab::DivisionByZero;
using pentalab::golden_constants;
using pentalab::ProjParam;
using pentalab::QSqrt5;
using pentalab::Rational;
using namespace pentalab::testing;

namespace {

QSqrt5 q(long an, long ad, long bn, long bd) {
  return QSqrt5(Rational(mpz_class(an), mpz_class(ad)), Rational(mpz_class(bn), mpz_class(bd)));
}

}  // namespace

TEST_CASE("golden ratio identities") {
  const auto [phi, psi] = golden_constants();
  CHECK(phi * psi == QSqrt5(-1));
  CHECK(phi * phi == phi + QSqrt5(1));
  CHECK(phi + psi == QSqrt5(1));
  CHECK(phi - psi == QSqrt5::sqrt5());
  CHECK(psi == -phi.inverse());
  CHECK(phi == q(1, 2, 1, 2));
  CHECK(psi == q(1, 2, -1, 2));
}

TEST_CASE("float phi is within one ulp") {
  const double phi = pentalab::golden<double>().first;
  const double expected = 1.6180339887498949;
  CHECK(std::abs(phi - expected) <= std::nextafter(expected, 2.0) - expected);
}

TEST_CASE("multiplication expands (a+b s)(c+d s)") {
  CHECK(QSqrt5(2, 3) * QSqrt5(4, -1) == QSqrt5(-7, 10));
}

TEST_CASE("inverse via conjugate") {
  const auto phi = golden_constants().phi;
  CHECK(QSqrt5::sqrt5().inverse() == q(0, 1, 1, 5));
  CHECK(phi.inverse() == phi - QSqrt5(1));
  CHECK(QSqrt5(2).inverse() == q(1, 2, 0, 1));
  CHECK_THROWS_AS((void)QSqrt5(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS((void)(QSqrt5(1) / QSqrt5(0)), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const QSqrt5 x = rand_qs5(rng), y = rand_qs5(rng), z = rand_qs5(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == QSqrt5(0));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QSqrt5(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("evaluation into double commutes with arithmetic") {
  Rng rng(12);
  std::uniform_int_distribution<long> num(-999999, 999999);
  std::uniform_int_distribution<long> den(1, 999999);
  auto rnd = [&] {
    return QSqrt5(Rational(mpz_class(num(rng)), mpz_class(den(rng))),
                  Rational(mpz_class(num(rng)), mpz_class(den(rng))));
  };
  for (int i = 0; i < 1000; ++i) {
    const QSqrt5 x = rnd(), y = rnd();
    const double fx = x.to_double(), fy = y.to_double();
    const double operand_scale = std::abs(fx) + std::abs(fy);
    CHECK(std::abs((x + y).to_double() - (fx + fy)) <= 1e-12 * operand_scale);
    CHECK(std::abs((x - y).to_double() - (fx - fy)) <= 1e-12 * operand_scale);
    const double prod = (x * y).to_double();
    CHECK(std::abs(prod - fx * fy) <= 1e-12 * std::abs(prod));
    if (!y.is_zero()) {
      const double quot = (x / y).to_double();
      CHECK(std::abs(quot - fx / fy) <= 1e-12 * std::abs(quot));
    }
  }
}

TEST_CASE("to_double survives cancellation between the parts") {
  // 161 - 72 sqrt5 = phi^-12, about 3.1e-3; naive evaluation loses digits.
  const QSqrt5 x(161, -72);
  const double exact = 1.0 / std::pow(pentalab::golden<double>().first, 12);
  CHECK(std::abs(x.to_double() - exact) <= 4 * std::numeric_limits<double>::epsilon() * exact);
  CHECK(x.sign() == 1);
  CHECK(QSqrt5(-161, 72).sign() == -1);
  CHECK(QSqrt5(0).sign() == 0);
  CHECK(QSqrt5(3, -1).sign() == 1);  // 9 > 5
  CHECK(QSqrt5(2, -1).sign() == -1);  // 4 < 5
}

TEST_CASE("canonical form makes equality structural") {
  const QSqrt5 a(Rational(mpz_class(6), mpz_class(4)), Rational(mpz_class(-3), mpz_class(-6)));
  const QSqrt5 b = q(3, 2, 1, 2);
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
  CHECK(a.rational_part().get_den() == 2);
  CHECK(std::hash<QSqrt5>{}(a) == std::hash<QSqrt5>{}(b));
  const QSqrt5 zero(Rational(mpz_class(0), mpz_class(7)));
  CHECK(zero.rational_part().get_den() == 1);
  std::unordered_set<QSqrt5> set{a, b, zero};
  CHECK(set.size() == 2);
}

TEST_CASE("literal format") {
  CHECK(q(1, 2, 1, 2).to_string() == "1/2+1/2*s5");
  CHECK(q(1, 2, -1, 2).to_string() == "1/2-1/2*s5");
  CHECK(QSqrt5(-7, 10).to_string() == "-7+10*s5");
  CHECK(q(0, 1, 1, 5).to_string() == "1/5*s5");
  CHECK(q(-23, 22, 0, 1).to_string() == "-23/22");
  CHECK(QSqrt5(0).to_string() == "0");
  CHECK(QSqrt5(4, 1).to_string() == "4+s5");
  CHECK(QSqrt5(0, -1).to_string() == "-s5");

  CHECK(QSqrt5::parse("1/2+1/2*s5") == golden_constants().phi);
  CHECK(QSqrt5::parse("1/2-1/2*s5") == golden_constants().psi);
  CHECK(QSqrt5::parse("s5") == QSqrt5::sqrt5());
  CHECK(QSqrt5::parse("-s5") == -QSqrt5::sqrt5());
  CHECK(QSqrt5::parse("3+s5") == QSqrt5(3, 1));
  CHECK(QSqrt5::parse("6/4") == q(3, 2, 0, 1));
  CHECK(QSqrt5::parse("0.2") == q(1, 5, 0, 1));
  CHECK(QSqrt5::parse("-1.25e1") == q(-25, 2, 0, 1));
  CHECK(QSqrt5::parse("2e-3*s5") == q(0, 1, 1, 500));

  for (const char* bad : {"", "abc", "1/0", "1/2*", "1+*s5", "1/2s5", "--1", "1/-2", "."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)QSqrt5::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("literal round trip on random elements") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const QSqrt5 x = rand_qs5(rng, 1000);
    CHECK(QSqrt5::parse(x.to_string()) == x);
  }
}

TEST_CASE("ProjParam holds a finite value or inf") {
  const ProjParam<QSqrt5> two(QSqrt5(2));
  const auto inf = ProjParam<QSqrt5>::infinity();
  CHECK(two.is_finite());
  CHECK(inf.is_infinite());
  CHECK(two.value() == QSqrt5(2));
  CHECK_THROWS_AS((void)inf.value(), std::logic_error);
  CHECK(inf == ProjParam<QSqrt5>::infinity());
  CHECK(two != inf);
  CHECK(pentalab::to_string(inf) == "inf");
}
