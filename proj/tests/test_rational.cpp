#include <doctest.h>

#include <algorithm>

#include "test_helpers.hpp"

using namespace borncheck;
using borncheck::testing::Gen;
using borncheck::testing::rat;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-4, -6).str() == "2/3");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parsing accepts integers, fractions and exact decimals") {
  CHECK(Rational::parse("7") == rat(7));
  CHECK(Rational::parse("-3/4") == rat(-3, 4));
  CHECK(Rational::parse("+3/4") == rat(3, 4));
  CHECK(Rational::parse("2.50") == rat(5, 2));
  CHECK(Rational::parse("0.25") == rat(1, 4));
  CHECK(Rational::parse("0.1") == rat(1, 10));
  CHECK(Rational::parse("-0.5") == rat(-1, 2));
  CHECK(Rational::parse("6/4") == rat(3, 2));

  for (const char* bad : {"", "-", "1/0", "1/-2", "1e5", "a", "1.", ".5",
                          "1..2", "1/2/3", "1 2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("str and parse round-trip") {
  Gen gen(7001);
  for (int i = 0; i < 200; ++i) {
    Rational r = gen.rational(1000, 997);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field laws hold for random rationals") {
  Gen gen(7002);
  for (int i = 0; i < 200; ++i) {
    Rational a = gen.rational();
    Rational b = gen.rational();
    Rational c = gen.rational();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (b != Rational(0)) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ordering is total and exact") {
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(-1, 2) < rat(-1, 3));
  CHECK(rat(2, 6) == rat(1, 3));
  std::vector<Rational> values = {rat(1), rat(-1), rat(1, 2), rat(-1, 2),
                                  rat(0), rat(3, 4)};
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Rational>{rat(-1), rat(-1, 2), rat(0), rat(1, 2),
                                        rat(3, 4), rat(1)});
}

TEST_CASE("decimal rendering truncates and trims") {
  CHECK(rat(1, 2).decimal() == "0.5");
  CHECK(rat(1).decimal() == "1");
  CHECK(rat(-1, 2).decimal() == "-0.5");
  CHECK(rat(9, 4).decimal() == "2.25");
  CHECK(rat(1, 3).decimal() == "0.333333");
  CHECK(rat(1, 7).decimal() == "0.142857");
  CHECK(rat(-22, 7).decimal() == "-3.142857");
  CHECK(rat(0).decimal() == "0");
  CHECK(rat(1, 2).decimal(0) == "0");
}

TEST_CASE("arithmetic does not overflow at large magnitudes") {
  Rational big = Rational::parse("1000000000000000000000000000000/3");
  CHECK((big * rat(3)).str() == "1000000000000000000000000000000");
  Rational power(1);
  for (int i = 0; i < 40; ++i) power *= rat(10);
  CHECK(power.str() == "1" + std::string(40, '0'));
  CHECK((power / power) == rat(1));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(rat(1) / rat(0), Error);
}
