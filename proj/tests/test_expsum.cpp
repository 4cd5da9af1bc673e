#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "opring/expsum.hpp"

using namespace opring;

namespace {
ExpSum u_pow(const Rat& r) { return ExpSum::monomial(r, 0); }
ExpSum v_pow(const Rat& s) { return ExpSum::monomial(0, s); }
}  // namespace

TEST_CASE("construction and term bookkeeping") {
  ExpSum zero;
  CHECK(zero.is_zero());
  CHECK(zero.term_count() == 0);

  ExpSum five(5);
  CHECK(five.is_constant());
  CHECK(five.constant_value() == FieldScalar(5));

  ExpSum m = ExpSum::monomial(Rat(1, 2), -1, FieldScalar(3));
  CHECK(m.term_count() == 1);
  CHECK(!m.is_constant());
  CHECK(m.leading().first == ExpKey{Rat(1, 2), Rat(-1)});
  CHECK(m.leading().second == FieldScalar(3));

  // cancelling terms are dropped from the map entirely
  ExpSum s = m;
  s.add_term({Rat(1, 2), -1}, FieldScalar(-3));
  CHECK(s.is_zero());
  CHECK_THROWS_AS((void)m.constant_value(), std::invalid_argument);
}

TEST_CASE("ring operations") {
  ExpSum u = u_pow(1), v = v_pow(1);
  ExpSum p = (u + v) * (u - v);
  CHECK(p == u_pow(2) - v_pow(2));
  CHECK((u + v) * ExpSum() == ExpSum());
  CHECK(u * v == ExpSum::monomial(1, 1));
  CHECK((u + v).scaled(FieldScalar(Rat(1, 2))) ==
        ExpSum::monomial(1, 0, Rat(1, 2)) + ExpSum::monomial(0, 1, Rat(1, 2)));
  CHECK((u + v).shifted(-1, 2) == ExpSum::monomial(0, 2) + ExpSum::monomial(-1, 3));
  CHECK(-(u - v) == v - u);
}

TEST_CASE("derivatives scale each term by its exponent") {
  // d/dx (u^2 v^-1) = 2 u^2 v^-1, d/dy picks up the factor -1
  ExpSum m = ExpSum::monomial(2, -1);
  CHECK(m.derive(Axis::X) == ExpSum::monomial(2, -1, FieldScalar(2)));
  CHECK(m.derive(Axis::Y) == ExpSum::monomial(2, -1, FieldScalar(-1)));
  CHECK(ExpSum(7).derive(Axis::X).is_zero());
  ExpSum h = ExpSum::monomial(Rat(1, 2), Rat(1, 2));
  CHECK(h.derive(Axis::X) == h.scaled(FieldScalar(Rat(1, 2))));

  test::Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    ExpSum a = rng.expsum(), b = rng.expsum();
    // Leibniz rule for the product
    CHECK((a * b).derive(Axis::X) == a.derive(Axis::X) * b + a * b.derive(Axis::X));
    CHECK((a + b).derive(Axis::Y) == a.derive(Axis::Y) + b.derive(Axis::Y));
  }
}

TEST_CASE("exponent bounding box and leading term") {
  ExpSum a = ExpSum::monomial(-1, 3) + ExpSum::monomial(2, -5);
  CHECK(a.min_r() == Rat(-1));
  CHECK(a.max_r() == Rat(2));
  CHECK(a.min_s() == Rat(-5));
  CHECK(a.max_s() == Rat(3));
  CHECK(a.leading().first == ExpKey{Rat(2), Rat(-5)});
  CHECK_THROWS_AS((void)ExpSum().min_r(), std::invalid_argument);
}

TEST_CASE("gcd is canonical") {
  ExpSum u = u_pow(1), v = v_pow(1);
  // gcd(2u, 2v) = 1: coprime monomials, content discarded
  CHECK(exp_gcd(u.scaled(FieldScalar(2)), v.scaled(FieldScalar(2))) == ExpSum(1));
  // gcd(u^2 - v^2, u - v) is the canonical associate of u - v
  ExpSum g = exp_gcd(u_pow(2) - v_pow(2), u - v);
  CHECK(g == exp_canonical_associate(u - v));
  CHECK(g.min_r() == Rat(0));
  CHECK(g.min_s() == Rat(0));
  CHECK(g.leading().second == FieldScalar(1));
  // gcd with zero returns the canonical associate of the other argument
  CHECK(exp_gcd(ExpSum(), u + v) == exp_canonical_associate(u + v));
  CHECK(exp_gcd(u + v, ExpSum()) == exp_canonical_associate(u + v));

  test::Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    ExpSum a = rng.nonzero_expsum(), b = rng.nonzero_expsum();
    ExpSum g2 = exp_gcd(a, b);
    CHECK(exp_try_divide(a, g2).has_value());
    CHECK(exp_try_divide(b, g2).has_value());
    CHECK(g2 == exp_canonical_associate(g2));
  }
}

TEST_CASE("exact division") {
  ExpSum u = u_pow(1), v = v_pow(1);
  auto q = exp_try_divide(u_pow(2) - v_pow(2), u - v);
  REQUIRE(q.has_value());
  CHECK(*q == u + v);
  // Laurent quotient: (u + v) / u = 1 + v/u
  auto q2 = exp_try_divide(u + v, u);
  REQUIRE(q2.has_value());
  CHECK(*q2 == ExpSum(1) + ExpSum::monomial(-1, 1));
  CHECK(!exp_try_divide(u + v, u - v).has_value());
  CHECK(exp_try_divide(ExpSum(), u + v)->is_zero());

  test::Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    ExpSum a = rng.expsum(), b = rng.nonzero_expsum();
    auto prod = exp_try_divide(a * b, b);
    REQUIRE(prod.has_value());
    CHECK(*prod == a);
  }
}

TEST_CASE("canonical associate pins shift and scale") {
  ExpSum a = ExpSum::monomial(-2, 1, FieldScalar(3)) + ExpSum::monomial(-1, -1, FieldScalar(6));
  ExpSum c = exp_canonical_associate(a);
  CHECK(c.min_r() == Rat(0));
  CHECK(c.min_s() == Rat(0));
  CHECK(c.leading().second == FieldScalar(1));
  // associates of scaled shifts agree
  CHECK(exp_canonical_associate(a.shifted(5, -3).scaled(FieldScalar(Rat(-7, 2)))) == c);
}

TEST_CASE("printing and structural order") {
  ExpSum s = ExpSum::monomial(1, 0) + ExpSum::monomial(0, 1, FieldScalar(-2));
  CHECK(s.to_string() == "e^(x) - 2*e^(y)");
  CHECK(ExpSum::monomial(Rat(1, 2), -1).to_string() == "e^(1/2x-y)");
  CHECK(ExpSum(FieldScalar::quadratic(1, 1, 2)).to_string() == "(1+sqrt(2))");
  CHECK(ExpSum().to_string() == "0");
  CHECK(ExpSum::struct_less(ExpSum(), s));
  CHECK(!ExpSum::struct_less(s, s));
}
