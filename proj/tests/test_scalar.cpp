#include <random>

#include "aw/scalar.hpp"
#include "doctest.h"

using aw::Scalar;

namespace {

Scalar S(const char* s) { return Scalar::parse(s); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("scalar text round trip") {
  CHECK(S("-9/8").str() == "-9/8");
  CHECK(S("0/1+1/1i").str() == "0/1+1/1i");
  CHECK(S("2").str() == "2/1");
  CHECK(S("i") == Scalar::i());
  CHECK(S("-i") == -Scalar::i());
  CHECK(S("3+4i") == Scalar(mpq_class(3), mpq_class(4)));
  CHECK(S("1/2-3/4i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK(S("\xe2\x88\x92" "9/8") == Scalar::ratio(-9, 8));
  CHECK(S("6/4") == Scalar::ratio(3, 2));
  for (const char* bad : {"", "abc", "1/0", "1//2", "2j", "+"}) CHECK_THROWS_AS(S(bad), aw::PreconditionError);
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    Scalar x = random_scalar(rng);
    CHECK(S(x.str().c_str()) == x);
  }
}

TEST_CASE("sqrt_exact") {
  CHECK(*aw::sqrt_exact(S("9/4")) == S("3/2"));
  CHECK(*aw::sqrt_exact(S("-1")) == Scalar::i());
  auto r = aw::sqrt_exact(S("2i"));
  REQUIRE(r);
  CHECK(*r * *r == S("2i"));
  CHECK(*r == S("1+i"));
  CHECK_FALSE(aw::sqrt_exact(Scalar(2)));
  CHECK(*aw::sqrt_exact(Scalar(0)) == Scalar(0));
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    Scalar y = random_scalar(rng);
    auto s = aw::sqrt_exact(y * y);
    REQUIRE(s);
    CHECK(*s * *s == y * y);
    CHECK((*s == y || *s == -y));
    if (!y.is_zero()) CHECK(aw::canonically_positive(*s));
  }
}

TEST_CASE("roots of unity") {
  CHECK_FALSE(aw::is_root_of_unity(Scalar(2)));
  CHECK(aw::is_root_of_unity(-Scalar::i()));
  CHECK(aw::is_root_of_unity(Scalar(-1)));
  Scalar q = S("3/5+4/5i");
  CHECK_FALSE(aw::is_root_of_unity(q));
  Scalar p = q;
  for (int k = 1; k <= 24; ++k, p *= q) CHECK(p != Scalar(1));
  CHECK_THROWS_AS(aw::is_root_of_unity(Scalar(0)), aw::PreconditionError);
}

TEST_CASE("field axioms on random draws") {
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(aw::pow(x + Scalar(100), -3) * aw::pow(x + Scalar(100), 3) == Scalar(1));
  }
  CHECK(Scalar::ratio(5, 7).conj() == Scalar::ratio(5, 7));
  CHECK(Scalar::i().conj() == -Scalar::i());
}

TEST_CASE("float backend conjugation on the unit circle") {
  for (double t : {0.1, 0.7, 1.0, 2.5, -3.0}) {
    aw::Complex q = std::polar(1.0, t);
    CHECK(std::abs(std::conj(q) - aw::inv(q)) < 1e-12);
    aw::Complex n = std::conj(q) * q;
    CHECK(n.real() >= 0.0);
    CHECK(std::abs(n.imag()) < 1e-15);
  }
}
