#include "doctest.h"

#include "ualpha/algebra.hpp"
#include "ualpha/sampling.hpp"

using namespace ualpha;

namespace {

AlgebraElement e(const char* name, const Rational& c = 1) { return AlgebraElement(Monomial::parse(name), c); }
const AlgebraElement kOne(Rational(1));

}  // namespace

TEST_CASE("add") {
  const AlgebraElement x = e("i1", 3) + e("j1i2", Rational(-1, 2));
  CHECK(x + AlgebraElement::zero() == x);
  CHECK((kOne + e("i1")) + (kOne - e("i1")) == AlgebraElement(Rational(2)));
  CHECK((e("i1") + Rational(-1) * e("i1")).is_zero());
  CHECK((e("i1") + e("-i1")).is_zero());
}

TEST_CASE("mul") {
  CHECK((kOne + e("i1")) * (kOne - e("i1")) == AlgebraElement(Rational(2)));
  // Cross terms i1i2*j1i2 and j1i2*i1i2 cancel; each square is +1.
  const AlgebraElement v = e("i1i2") + e("j1i2");
  CHECK(v * v == AlgebraElement(Rational(2)));
  CHECK(e("i3") * e("i3") == AlgebraElement(Rational(-1)));
}

TEST_CASE("is_zero") {
  CHECK(AlgebraElement::zero().is_zero());
  CHECK((kOne - kOne).is_zero());
  CHECK_FALSE((e("i1") - e("j1")).is_zero());
  CHECK(AlgebraElement(Rational(0)).is_zero());
  CHECK((e("i1") * Rational(0)).is_zero());
}

TEST_CASE("no zero coefficients are stored") {
  AlgebraElement x = e("i1", 2) + e("j1", 3);
  x -= e("i1", 2);
  CHECK(x.size() == 1);
  CHECK(x.coefficient(Monomial::parse("i1").mask) == 0);
  CHECK(x.coefficient(Monomial::parse("j1").mask) == 3);
}

TEST_CASE("ring laws on random elements") {
  Sampler rng(2024);
  for (int s = 0; s < 200; ++s) {
    const int level = static_cast<int>(rng.integer(0, 5));
    const auto x = rng.element(level);
    const auto y = rng.element(level);
    const auto z = rng.element(level);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x + y) * z == x * z + y * z);
    const AlgebraElement q(rng.rational());
    REQUIRE(q * x == x * q);
  }
}

TEST_CASE("single-term products agree with monomial multiply") {
  for (Mask a = 0; a < 32; ++a)
    for (Mask b = 0; b < 32; ++b) {
      const Monomial x{(a & 1) != 0, a};
      const Monomial y{(b & 2) != 0, b};
      REQUIRE(AlgebraElement(x) * AlgebraElement(y) == AlgebraElement(multiply(x, y)));
    }
}

TEST_CASE("text form") {
  CHECK(AlgebraElement::zero().to_string() == "0");
  CHECK(AlgebraElement(Rational(2)).to_string() == "2*1");
  const auto x = e("i1j1", 5) + e("i2j2i3", -4) + e("j1i3", 3);
  CHECK(x.to_string() == "5*i1j1 + 3*j1i3 - 4*i2j2i3");
  CHECK((e("i1", -1) + e("j1", Rational(1, 2))).to_string() == "-1*i1 + 1/2*j1");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("+7") == 7);
  for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.2.3", "1/2.5", "-", "."}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}
