#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturmian/error.hpp"
#include "sturmian/quadratic.hpp"

using namespace sturmian;

namespace {

QuadNumber q(const char* s) { return parse_quad(s); }

QuadNumber random_quad(std::mt19937_64& rng, int radicand) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  return QuadNumber(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), radicand);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((q("-1+sqrt(3)") * q("1+sqrt(3)")) == QuadNumber(2));
  CHECK((q("3/2-1/2*sqrt(3)") + q("-1+sqrt(3)")) == q("1/2+1/2*sqrt(3)"));
  const QuadNumber x = q("7/3-5*sqrt(2)");
  CHECK(x + QuadNumber(0) == x);
  CHECK(x - x == QuadNumber(0));
  CHECK((x / x) == QuadNumber(1));
}

TEST_CASE("conjugate examples") {
  CHECK(q("-1/2+1/2*sqrt(3)").conjugate() == q("-1/2-1/2*sqrt(3)"));
  CHECK(q("-1/2+sqrt(3)").conjugate() == q("-1/2-sqrt(3)"));
  CHECK(q("5/7").conjugate() == q("5/7"));
}

TEST_CASE("sign examples") {
  CHECK(q("7/2-3/2*sqrt(3)").sign() == Sign::positive);
  CHECK(QuadNumber(0).sign() == Sign::zero);
  CHECK(q("-1/2-1/2*sqrt(3)").sign() == Sign::negative);
  CHECK(q("-7+5*sqrt(2)").sign() == Sign::positive);   // 50 > 49
  CHECK(q("7-5*sqrt(2)").sign() == Sign::negative);
}

TEST_CASE("parse and format") {
  const QuadNumber x = q("2+1*sqrt(12)");
  CHECK(x.rational_part() == 2);
  CHECK(x.radical_coefficient() == 2);
  CHECK(x.radicand() == 3);

  CHECK(q("-1/2+1/2*sqrt(3)") == (QuadNumber::sqrt(3) - QuadNumber(1)) / QuadNumber(2));
  const QuadNumber r = q("3/4");
  CHECK(r.is_rational());
  CHECK(r.radicand() == 1);
  CHECK(r.rational_part() == Rational(3, 4));

  CHECK(q("sqrt(4)") == QuadNumber(2));
  CHECK(q("-sqrt(8)") == QuadNumber(Rational(0), Rational(-2), 2));
  CHECK(q(" 1 - sqrt(5) ") == QuadNumber(Rational(1), Rational(-1), 5));
  CHECK(q("6/4") == QuadNumber(Rational(3, 2)));

  for (const char* s : {"0", "-3/5", "1/2+1/2*sqrt(3)", "-1-2/3*sqrt(7)", "5*sqrt(2)", "-sqrt(6)"}) {
    CAPTURE(s);
    CHECK(q(format_quad(q(s)).c_str()) == q(s));
  }
  CHECK(format_quad(q("1/2-1/2*sqrt(3)")) == "1/2-1/2*sqrt(3)");
  CHECK(format_quad(q("sqrt(12)")) == "2*sqrt(3)");
}

TEST_CASE("errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NoMatch;
  };
  CHECK(kind_of([] { q("1+"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { q("sqrt(x)"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { q("1/0"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { q("sqrt(-3)"); }) == ErrorKind::NonPositiveRadicand);
  CHECK(kind_of([] { (void)(QuadNumber(1) / QuadNumber(0)); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { (void)(QuadNumber::sqrt(2) + QuadNumber::sqrt(3)); }) == ErrorKind::IncompatibleFields);
  CHECK(kind_of([] { (void)(QuadNumber::sqrt(2) < QuadNumber::sqrt(3)); }) == ErrorKind::IncompatibleFields);
  CHECK_NOTHROW((void)(QuadNumber::sqrt(2) * QuadNumber(Rational(3, 7))));
}

TEST_CASE("square-free decomposition") {
  CHECK(square_free_decompose(72) == std::pair<Integer, Integer>(6, 2));
  CHECK(square_free_decompose(1) == std::pair<Integer, Integer>(1, 1));
  CHECK(square_free_decompose(30) == std::pair<Integer, Integer>(1, 30));
  const Integer big_prime = Integer("2305843009213693951");  // 2^61 - 1
  CHECK(square_free_decompose(big_prime * 9) == std::pair<Integer, Integer>(3, big_prime));
  const Integer p = Integer(2147483647);  // above the trial bound
  CHECK(square_free_decompose(p * p * 5) == std::pair<Integer, Integer>(p, 5));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int radicand : {2, 3, 5, 7, 13}) {
    for (int i = 0; i < 40; ++i) {
      const QuadNumber x = random_quad(rng, radicand);
      const QuadNumber y = random_quad(rng, radicand);
      const QuadNumber z = random_quad(rng, radicand);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x + (-x) == QuadNumber(0));
      if (!x.is_zero()) CHECK(x * (QuadNumber(1) / x) == QuadNumber(1));
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      CHECK(x.norm() == (x * x.conjugate()).rational_part());
    }
  }
}

TEST_CASE("canonical radicand is always square-free") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> rad(1, 500);
  for (int i = 0; i < 300; ++i) {
    const QuadNumber x = QuadNumber(Rational(i), Rational(i % 7 + 1), rad(rng));
    const Integer d = x.radicand();
    for (Integer p = 2; p * p <= d; ++p) REQUIRE(d % (p * p) != 0);
    if (!x.is_rational()) CHECK(x.radical_coefficient() != 0);
  }
}

TEST_CASE("sign agrees with 50-digit evaluation") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> rad(2, 60);
  int checked = 0;
  while (checked < 1000) {
    const QuadNumber x = random_quad(rng, rad(rng));
    const oracle::Float f = oracle::to_float(x);
    const Sign expected = f > 0 ? Sign::positive : (f < 0 ? Sign::negative : Sign::zero);
    CHECK(x.sign() == expected);
    ++checked;
  }
  // Near-cancellation: 1351^2 - 3 * 780^2 = 1.
  CHECK(q("-1351+780*sqrt(3)").sign() == Sign::negative);
  CHECK(q("1351-780*sqrt(3)").sign() == Sign::positive);
  CHECK(q("-1351/780+sqrt(3)").sign() == Sign::negative);
  CHECK(q("-2702+1561*sqrt(3)").sign() == Sign::positive);  // 3 * 1561^2 - 2702^2 = 9359
}

TEST_CASE("ordering") {
  CHECK(q("-1+sqrt(3)") < QuadNumber(1));
  CHECK(q("-1+sqrt(3)") > q("1/2"));
  CHECK(q("2-sqrt(3)") < q("-1+sqrt(3)"));
  CHECK(q("1/3") <= q("2/6"));
}
