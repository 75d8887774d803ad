#include <doctest.h>

#include <functional>

#include "support/generators.hpp"

using namespace flexpoly;

namespace {

NumfieldError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const NumfieldError& e) {
    return e.kind();
  }
  FAIL("expected NumfieldError");
  return NumfieldError::Kind::Parse;
}

const FieldTower& q2() {
  static const FieldTower t = adjoin(FieldTower{}, 2);
  return t;
}

}  // namespace

TEST_CASE("rationals parse exactly and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-17/2") == Rational(-17, 2));
  CHECK(parse_rational("0.834943") == Rational(834943, 1000000));
  CHECK(parse_rational("-0.08") == Rational(-2, 25));
  CHECK(parse_rational("1.5e3") == Rational(1500));
  CHECK(parse_rational("25e-2") == Rational(1, 4));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(rational_string(Rational(0)) == "0");
  CHECK(rational_string(parse_rational("-6/4")) == "-3/2");
  CHECK(decimal_string(Rational(2, 3), 4) == "0.6667");
  CHECK(decimal_string(Rational(-1, 200), 2) == "-0.01");
  CHECK(decimal_string(Rational(-1, 1000), 2) == "0.00");
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "3/x", "1e"})
    CHECK(kind_of([&] { parse_rational(bad); }) == NumfieldError::Kind::Parse);
}

TEST_CASE("adjoin builds genuine extensions and refuses squares") {
  CHECK(q2().depth() == 1);
  CHECK(q2().to_string() == "Q(sqrt(2))");
  try {
    adjoin(FieldTower{}, 4);
    FAIL("4 is a square");
  } catch (const AlreadySquare& e) {
    CHECK(e.root() * e.root() == FieldElem(4));
    CHECK(e.root().rational_value() * e.root().rational_value() == 4);
  }
  CHECK(kind_of([] { adjoin(FieldTower{}, -2); }) == NumfieldError::Kind::NonPositiveRadicand);
  CHECK(kind_of([] { adjoin(FieldTower{}, 0); }) == NumfieldError::Kind::NonPositiveRadicand);
  // 3 + 2 sqrt2 = (1 + sqrt2)^2
  const FieldElem s2 = q2().generator(1);
  CHECK(kind_of([&] { adjoin(q2(), FieldElem(3) + FieldElem(2) * s2); }) == NumfieldError::Kind::AlreadySquare);
  // 2 is already a square in Q(sqrt 2)
  CHECK(kind_of([&] { adjoin(q2(), FieldElem(2).lifted(q2())); }) == NumfieldError::Kind::AlreadySquare);

  const FieldTower t5146 = adjoin(FieldTower{}, 5146);
  const FieldElem a = FieldElem(Rational("23829556819105727")) +
                      FieldElem(Rational("373057935372156")) * t5146.generator(1);
  const FieldTower ta = adjoin(t5146, a);
  CHECK(ta.depth() == 2);
  CHECK(ta.to_string() == "Q(sqrt(5146), sqrt(23829556819105727 + 373057935372156*sqrt(5146)))");
}

TEST_CASE("arithmetic examples") {
  const FieldElem s2 = q2().generator(1);
  CHECK((FieldElem(1) + s2) * (FieldElem(1) - s2) == FieldElem(-1));
  CHECK(FieldElem(1) / (FieldElem(3) - FieldElem(2) * s2) == FieldElem(3) + FieldElem(2) * s2);
  CHECK(FieldElem(Rational(17, 2)) - FieldElem(Rational(-17, 2)) == FieldElem(17));
  CHECK(s2 * s2 == FieldElem(2));
  CHECK((s2 * s2).is_rational());

  CHECK(kind_of([&] { (void)(s2 / (s2 - s2)); }) == NumfieldError::Kind::DivisionByZero);
  const FieldTower q3 = adjoin(FieldTower{}, 3);
  CHECK(kind_of([&] { (void)(s2 + q3.generator(1)); }) == NumfieldError::Kind::IncompatibleTowers);
}

TEST_CASE("rendering") {
  const FieldTower t = adjoin(adjoin(FieldTower{}, 31), 166);
  const FieldElem x = FieldElem(Rational(187, 12)) * t.generator(2);
  CHECK(x.to_string() == "187/12*sqrt(166)");
  CHECK((FieldElem(Rational(-3, 2)) * t.generator(1)).to_string() == "-3/2*sqrt(31)");
  CHECK(FieldElem(0).to_string() == "0");
}

TEST_CASE("sign examples") {
  const FieldElem s2 = q2().generator(1);
  CHECK(sign(FieldElem(3) - FieldElem(2) * s2) == 1);
  CHECK(sign(FieldElem(2) * s2 - FieldElem(3)) == -1);
  CHECK(sign(FieldElem(0)) == 0);
  CHECK(sign(s2 - s2) == 0);
  const FieldTower t31 = adjoin(FieldTower{}, 31);
  CHECK(sign(FieldElem(Rational(-3, 2)) * t31.generator(1)) == -1);
  // 577 - 408 sqrt2 is about 8.7e-4
  CHECK(sign(FieldElem(577) - FieldElem(408) * s2) == 1);
}

TEST_CASE("sqrt_in_field examples") {
  CHECK(*sqrt_in_field(FieldElem(Rational(9, 4))) * *sqrt_in_field(FieldElem(Rational(9, 4))) ==
        FieldElem(Rational(9, 4)));
  CHECK(*positive_sqrt_in_field(FieldElem(Rational(9, 4))) == FieldElem(Rational(3, 2)));
  const FieldElem s2 = q2().generator(1);
  CHECK(*positive_sqrt_in_field(FieldElem(3) + FieldElem(2) * s2) == FieldElem(1) + s2);
  CHECK_FALSE(sqrt_in_field(FieldElem(5146)).has_value());
  CHECK_FALSE(sqrt_in_field(FieldElem(1) + s2).has_value());
  CHECK(*positive_sqrt_in_field(FieldElem(0)) == FieldElem(0));
  CHECK(kind_of([] { sqrt_in_field(FieldElem(-1)); }) == NumfieldError::Kind::NegativeInput);
}

TEST_CASE("approx examples") {
  const FieldTower t166 = adjoin(FieldTower{}, 166);
  const DecimalInterval iv = approx(FieldElem(Rational(1, 2)) * t166.generator(1), 6);
  CHECK(iv.to_string(6) == "6.442049");
  CHECK(iv.width() < Rational(1, 1000000));
  const DecimalInterval z = approx(FieldElem(0), 8);
  CHECK(z.lower == 0);
  CHECK(z.upper == 0);
}

TEST_CASE("strip_rational_squares keeps the value") {
  const FieldElem s2 = q2().generator(1);
  for (const FieldElem& x : {FieldElem(12), FieldElem(Rational(50, 9)), FieldElem(Rational(8, 3)) * s2 + FieldElem(4)}) {
    const auto [c, y] = strip_rational_squares(x);
    CHECK(c > 0);
    CHECK(FieldElem(c * c) * y == x);
  }
  CHECK(strip_rational_squares(FieldElem(12)).second == FieldElem(3));
}

TEST_CASE("property: field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& [name, tower] : gen::towers()) {
    CAPTURE(name);
    for (int i = 0; i < 150; ++i) {
      const FieldElem x = gen::random_elem(rng, tower), y = gen::random_elem(rng, tower),
                      z = gen::random_elem(rng, tower);
      CHECK(((x * y) * z - x * (y * z)).is_zero());
      CHECK((x * (y + z) - (x * y + x * z)).is_zero());
      CHECK((x + y - y - x).is_zero());
      if (!x.is_zero()) CHECK((x * (FieldElem(1) / x) - FieldElem(1)).is_zero());
    }
  }
}

TEST_CASE("property: sign agrees with a high-precision evaluation") {
  std::mt19937_64 rng(12);
  for (const auto& [name, tower] : gen::towers()) {
    CAPTURE(name);
    for (int i = 0; i < 150; ++i) {
      const FieldElem x = i % 3 == 0 ? gen::near_cancelling(rng, tower) : gen::random_elem(rng, tower);
      CAPTURE(x.to_string());
      const int s = sign(x);
      if (x.is_zero()) {
        CHECK(s == 0);
        continue;
      }
      CHECK(s == oracle::mpfr_sign(x));
      const DecimalInterval iv = approx(x, 30);
      CHECK(iv.width() < Rational(1, mpz_class("1000000000000000000000000000000")));
      if (iv.excludes_zero()) CHECK((iv.lower > 0 ? 1 : -1) == s);
    }
  }
}

TEST_CASE("property: certified enclosures contain the value") {
  std::mt19937_64 rng(13);
  for (const auto& [name, tower] : gen::towers()) {
    for (int i = 0; i < 60; ++i) {
      const FieldElem x = gen::random_elem(rng, tower);
      const DecimalInterval iv = approx(x, 12);
      oracle::MpfrValue v(512), lo(512), hi(512);
      oracle::evaluate(x, v.get());
      mpfr_set_q(lo.get(), iv.lower.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(hi.get(), iv.upper.get_mpq_t(), MPFR_RNDU);
      CHECK(mpfr_lessequal_p(lo.get(), v.get()));
      CHECK(mpfr_lessequal_p(v.get(), hi.get()));
    }
  }
}

TEST_CASE("property: square roots are sound and found for squares") {
  std::mt19937_64 rng(14);
  for (const auto& [name, tower] : gen::towers()) {
    CAPTURE(name);
    for (int i = 0; i < 40; ++i) {
      const FieldElem y = gen::random_elem(rng, tower);
      const auto r = sqrt_in_field(y * y);
      REQUIRE(r.has_value());
      CHECK((*r * *r - y * y).is_zero());
      const auto p = positive_sqrt_in_field(y * y);
      CHECK(sign(*p) >= 0);

      const FieldElem x = gen::random_elem(rng, tower);
      if (sign(x) < 0) continue;
      if (const auto root = sqrt_in_field(x)) CHECK((*root * *root - x).is_zero());
    }
  }
}

TEST_CASE("property: lifting and lowering preserve coefficients") {
  std::mt19937_64 rng(15);
  for (const auto& [name, tower] : gen::towers()) {
    for (int d = 0; d <= tower.depth(); ++d) {
      const FieldTower low = tower.truncated(d);
      CHECK(low.is_prefix_of(tower));
      const FieldElem x = gen::random_elem(rng, low);
      const FieldElem up = x.lifted(tower);
      CHECK(up.tower() == tower);
      const FieldElem back = up.lowered(low);
      REQUIRE(back.coefficients().size() == x.coefficients().size());
      CHECK(std::equal(back.coefficients().begin(), back.coefficients().end(), x.coefficients().begin()));
      CHECK(up == x);
    }
  }
}
