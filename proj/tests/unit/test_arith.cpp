#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace coisored;
using namespace coisored::testing;

TEST_CASE("polynomial arithmetic examples") {
  auto r = ring_of({"x", "y"});
  CHECK((P(r, "x + 1") + P(r, "x - 1")) == P(r, "2*x"));
  CHECK((P(r, "x + y") * P(r, "x - y")) == P(r, "x^2 - y^2"));
  CHECK((P(r, "3*x*y + 7") * Polynomial(r)).is_zero());
  CHECK((P(r, "x") - P(r, "x")).is_zero());
}

TEST_CASE("mismatched rings are rejected") {
  auto r = ring_of({"x"});
  auto s = ring_of({"y"});
  CHECK_THROWS_AS(P(r, "x") + P(s, "y"), InputError);
}

TEST_CASE("substitute examples") {
  auto x = ring_of({"x"});
  auto y = ring_of({"y"});
  CHECK(substitute(P(x, "x^2"), {P(y, "y + 1")}, y) == P(y, "y^2 + 2*y + 1"));
  auto xy = ring_of({"x", "y"});
  CHECK(substitute(P(xy, "x*y"), Ps(xy, {"x", "y"}), xy) == P(xy, "x*y"));
  CHECK(substitute(P(xy, "x + y"), Ps(xy, {"0", "0"}), xy).is_zero());
  std::map<std::string, Polynomial> partial{{"x", P(y, "y")}};
  CHECK_THROWS_AS(substitute(P(xy, "x + y"), partial, y), InputError);
}

TEST_CASE("monomial order examples") {
  auto r = ring_of({"x", "y"});
  const Monomial x = P(r, "x").terms()[0].mono;
  const Monomial y2 = P(r, "y^2").terms()[0].mono;
  CHECK(MonomialOrder::lex().greater(x, y2));
  CHECK(MonomialOrder::grevlex().greater(y2, x));
  for (const auto& o : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    CHECK(o.compare(x, x) == std::strong_ordering::equal);
  }
  // grevlex breaks degree ties on the last variable: x*z < y^2 in k[x, y, z].
  auto s = ring_of({"x", "y", "z"});
  CHECK(MonomialOrder::grevlex().greater(P(s, "y^2").terms()[0].mono, P(s, "x*z").terms()[0].mono));
  CHECK(MonomialOrder::lex().greater(P(s, "x*z").terms()[0].mono, P(s, "y^2").terms()[0].mono));
}

TEST_CASE("parser accepts the grammar and rejects garbage with a column") {
  auto r = ring_of({"q1", "q2", "p2"});
  Polynomial f = P(r, "3/2*q1^2*p2 - q2 + 1");
  CHECK(f.size() == 3);
  CHECK(f.to_string() == "3/2*q1^2*p2 - q2 + 1");
  CHECK(P(r, "  q1 *q1 ") == P(r, "q1^2"));
  CHECK(P(r, "2/4*q2") == P(r, "1/2*q2"));
  CHECK(P(r, "-q1 + q1").is_zero());
  try {
    P(r, "q1 + w");
    FAIL("expected a syntax error");
  } catch (const PolynomialSyntaxError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(P(r, "q1 +"), PolynomialSyntaxError);
  CHECK_THROWS_AS(P(r, "q1^"), PolynomialSyntaxError);
  CHECK_THROWS_AS(P(r, "1/0"), PolynomialSyntaxError);
}

TEST_CASE("printed polynomials parse back") {
  std::mt19937_64 rng(7);
  auto r = ring_of({"a", "b", "c"});
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_poly(rng, r, 5, 4).scaled(Rational(2, 3));
    CHECK(P(r, f.to_string()) == f);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 60; ++k) {
    Polynomial f = random_poly(rng, r, 4, 3);
    Polynomial g = random_poly(rng, r, 4, 3);
    Polynomial h = random_poly(rng, r, 4, 3);
    CHECK((f + g) == (g + f));
    CHECK((f * g) == (g * f));
    CHECK(((f + g) + h) == (f + (g + h)));
    CHECK(((f * g) * h) == (f * (g * h)));
    CHECK((f * (g + h)) == (f * g + f * h));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("substitute is an algebra morphism") {
  std::mt19937_64 rng(13);
  auto src = ring_of({"x", "y"});
  auto tgt = ring_of({"a", "b", "c"});
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> images{random_poly(rng, tgt, 3, 2), random_poly(rng, tgt, 3, 2)};
    Polynomial f = random_poly(rng, src, 4, 3);
    Polynomial g = random_poly(rng, src, 4, 3);
    CHECK(substitute(f * g, images, tgt) == substitute(f, images, tgt) * substitute(g, images, tgt));
    CHECK(substitute(f + g, images, tgt) == substitute(f, images, tgt) + substitute(g, images, tgt));
  }
}

TEST_CASE("monomial orders are total, transitive and multiplicative") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 3);
  auto mono = [&] { return Monomial(std::vector<Monomial::Exponent>{Monomial::Exponent(e(rng)), Monomial::Exponent(e(rng)), Monomial::Exponent(e(rng))}); };
  const std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(), MonomialOrder::grevlex(),
      MonomialOrder::block(1, MonomialOrder::grevlex(), MonomialOrder::lex())};
  for (const auto& o : orders) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = mono(), b = mono(), c = mono();
      CHECK((o.compare(a, b) == 0) == (a == b));
      CHECK((o.compare(a, b) > 0) == (o.compare(b, a) < 0));
      if (o.greater(a, b) && o.greater(b, c)) CHECK(o.greater(a, c));
      if (o.greater(a, b)) CHECK(o.greater(a * c, b * c));
      CHECK(!o.greater(Monomial(3), a));
    }
  }
}
