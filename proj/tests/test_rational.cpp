#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "ghznl/rational.hpp"

using ghznl::GaussianRational;
using ghznl::Rational;

TEST_CASE("rationals canonicalize at construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-1, -2).str() == "1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(mpz_class(3), mpz_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("parse accepts integers and fractions only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("4/6") == Rational(2, 3));  // reduced on entry
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("1/-2") == Rational(-1, 2));  // sign moves to the numerator

  for (const char* bad :
       {"", " 1", "1 ", "1/", "/2", "a", "1/b", "1//2", "1/2/3", "1.5", "+3", "0x10"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("str and parse are inverse on canonical forms") {
  const Rational samples[] = {Rational(0),     Rational(5),      Rational(-5),
                              Rational(1, 3),  Rational(-7, 8),  Rational(22, 7),
                              Rational(100, 6)};
  for (const Rational& r : samples) CHECK(Rational::parse(r.str()) == r);
}

TEST_CASE("field arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);

  // the float counterexample: 1/10 + 2/10 == 3/10 exactly
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("ordering matches cross-multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 8) >= Rational(7, 8));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(ghznl::abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("to_double is a faithful approximation") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(7, 8).to_double() == doctest::Approx(0.875));
  std::ostringstream os;
  os << Rational(3, 4);
  CHECK(os.str() == "3/4");
}

TEST_CASE("gaussian rationals form a field") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == -i);
  CHECK(GaussianRational(Rational(3), Rational(4)).norm2() == Rational(25));
  CHECK(GaussianRational(Rational(3), Rational(4)).is_real() == false);

  GaussianRational a(Rational(1, 2), Rational(-1, 3));
  GaussianRational b(Rational(2, 5), Rational(7));
  CHECK((a / b) * b == a);
  CHECK(a * b == b * a);
  CHECK(a + b - b == a);
  CHECK((a * a.conj()).is_real());
  CHECK((a * a.conj()).re == a.norm2());
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("gaussian rational rendering") {
  CHECK(GaussianRational(Rational(1, 2)).str() == "1/2");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "1i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-1i");
  CHECK(GaussianRational(Rational(0), Rational(2, 3)).str() == "2/3i");
  CHECK(GaussianRational(Rational(1), Rational(1)).str() == "1+1i");
  CHECK(GaussianRational(Rational(1), Rational(-3, 4)).str() == "1-3/4i");
  CHECK(GaussianRational().str() == "0");
}
