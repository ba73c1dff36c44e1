#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace coisored;
using namespace coisored::testing;

namespace {

PresentedAlgebra alg(std::vector<std::string> vars, std::vector<std::string> rels, std::string label) {
  auto r = ring_of(std::move(vars));
  return PresentedAlgebra(r, Ps(r, rels), std::move(label));
}

}  // namespace

TEST_CASE("check_morphism examples") {
  auto x2 = alg({"x"}, {"x^2"}, "A");
  auto y = alg({"y"}, {}, "B");
  auto y2 = alg({"y"}, {"y^2"}, "C");
  CHECK(check_morphism(AlgebraMorphism::identity(x2)));
  CHECK(!check_morphism(AlgebraMorphism(x2, y, {y.var("y")})));
  CHECK(check_morphism(AlgebraMorphism(x2, y2, {y2.var("y")})));
  auto w = morphism_failure(AlgebraMorphism(x2, y, {y.var("y")}));
  REQUIRE(w);
  CHECK(w->generator == "x^2");
  CHECK(w->residue == "y^2");
}

TEST_CASE("compose examples") {
  auto x = alg({"x"}, {}, "X");
  auto y = alg({"y"}, {}, "Y");
  auto z = alg({"z"}, {}, "Z");
  AlgebraMorphism phi(x, y, {y.var("y")});
  CHECK(compose(AlgebraMorphism::identity(x), phi).images() == phi.images());
  AlgebraMorphism psi(y, z, {z.var("z")});
  CHECK(compose(phi, psi).image(0) == z.var("z"));
  AlgebraMorphism sq(x, y, {y.parse("y^2")});
  AlgebraMorphism shift(y, z, {z.parse("z + 1")});
  CHECK(compose(sq, shift).image(0) == z.parse("z^2 + 2*z + 1"));
  CHECK_THROWS_AS(compose(phi, phi), InputError);
}

TEST_CASE("fibered coproduct examples") {
  auto a = alg({"x"}, {"x^2"}, "A");
  auto b = alg({"y"}, {"y^3"}, "B");
  FiberedCoproduct p = product_algebra(a, b);
  CHECK(p.result.variables() == std::vector<std::string>{"L_x", "R_y"});
  CHECK(p.result.relations().generators() == Ps(p.result.ring(), {"L_x^2", "R_y^3"}));

  auto base = alg({"s"}, {}, "S");
  FiberedCoproduct diag =
      fibered_coproduct(base, base, base, AlgebraMorphism::identity(base), AlgebraMorphism::identity(base));
  CHECK(diag.result.equal(diag.result.parse("L_s"), diag.result.parse("R_s")));

  auto torus = alg({"t", "u", "z"}, {"t*u - 1"}, "T");
  auto k4 = canonical_k4();
  auto zb = alg({"z"}, {}, "Z");
  FiberedCoproduct fc = fibered_coproduct(torus, k4, zb, AlgebraMorphism(zb, torus, {torus.var("z")}),
                                          AlgebraMorphism(zb, k4, {k4.parse("q1*p1 - q2*p2")}));
  CHECK(fc.result.relations().generators() ==
        Ps(fc.result.ring(), {"L_t*L_u - 1", "L_z - R_q1*R_p1 + R_q2*R_p2"}));
  // Ill-defined legs are rejected.
  auto x2 = alg({"x"}, {"x^2"}, "X2");
  auto fr = alg({"y"}, {}, "Y");
  CHECK_THROWS_AS(fibered_coproduct(fr, fr, x2, AlgebraMorphism(x2, fr, {fr.var("y")}),
                                    AlgebraMorphism(x2, fr, {fr.var("y")})),
                  InputError);
}

TEST_CASE("quotient examples") {
  auto k4 = canonical_k4();
  auto [same, id] = quotient(k4, Ideal(k4.ring()));
  CHECK(same_presentation(same, k4));
  CHECK(id.images() == AlgebraMorphism::identity(k4).images());
  auto x = alg({"x"}, {}, "X");
  auto [pt, proj] = quotient(x, Ideal(x.ring(), {x.var("x")}));
  CHECK(pt.is_zero(pt.var("x")));
  auto [fiber, j] = quotient(k4, Ideal(k4.ring(), {k4.parse("q1*p1 - q2*p2")}));
  CHECK(fiber.equal(fiber.parse("q1*p1"), fiber.parse("q2*p2")));
  CHECK(!fiber.is_zero(fiber.parse("q1")));
}

TEST_CASE("well-definedness is preserved by composition") {
  std::mt19937_64 rng(41);
  auto a = alg({"x", "y"}, {"x*y"}, "A");
  auto b = alg({"s", "t"}, {"s^2*t"}, "B");
  auto c = alg({"u"}, {}, "C");
  for (int k = 0; k < 20; ++k) {
    // x -> s^2 * f, y -> t * g kills x*y; s, t -> arbitrary in a free algebra.
    AlgebraMorphism phi(a, b,
                        {b.var("s") * b.var("s") * random_poly(rng, b.ring(), 2, 1),
                         b.var("t") * random_poly(rng, b.ring(), 2, 1)});
    AlgebraMorphism psi(b, c, {Polynomial(c.ring()), random_poly(rng, c.ring(), 3, 2)});
    REQUIRE(check_morphism(phi));
    REQUIRE(check_morphism(psi));
    CHECK(check_morphism(compose(phi, psi)));
  }
}

TEST_CASE("mediating morphisms satisfy the universal property") {
  std::mt19937_64 rng(43);
  auto base = alg({"z"}, {}, "Z");
  auto a = alg({"x", "w"}, {}, "A");
  auto b = alg({"y"}, {}, "B");
  FiberedCoproduct fc = fibered_coproduct(a, b, base, AlgebraMorphism(base, a, {a.parse("x*w")}),
                                          AlgebraMorphism(base, b, {b.parse("y^2")}));
  auto c = alg({"c1", "c2"}, {}, "C");
  for (int k = 0; k < 15; ++k) {
    // Choose g freely, then f with f(x*w) = g(y^2).
    Polynomial gy = random_poly(rng, c.ring(), 3, 2);
    Polynomial fx = random_poly(rng, c.ring(), 2, 1);
    AlgebraMorphism g(b, c, {gy * fx});
    AlgebraMorphism f(a, c, {gy * gy * fx, fx});
    AlgebraMorphism h = mediate(fc, f, g);
    CHECK(check_morphism(h));
    CHECK(compose(fc.left_inclusion, h).images() == f.images());
    CHECK(compose(fc.right_inclusion, h).images() == g.images());
  }
  AlgebraMorphism bad_f(a, c, {c.var("c1"), c.var("c1")});
  AlgebraMorphism bad_g(b, c, {c.var("c2")});
  CHECK_THROWS_AS(mediate(fc, bad_f, bad_g), InputError);
}

TEST_CASE("quotient projection kills exactly J") {
  std::mt19937_64 rng(47);
  auto k3 = alg({"x", "y", "z"}, {"x*y - z"}, "K");
  Ideal j(k3.ring(), {k3.parse("x^2 - y")});
  auto [q, proj] = quotient(k3, j);
  for (const auto& im : proj.images()) CHECK(im.size() == 1);
  for (int k = 0; k < 20; ++k) {
    Polynomial f = random_poly(rng, k3.ring(), 3, 3);
    Polynomial g = random_poly(rng, k3.ring(), 2, 2);
    CHECK(q.is_zero(proj.apply(g * j.generators()[0])));
    CHECK(q.equal(proj.apply(f), proj.apply(f + g * j.generators()[0])));
    CHECK(q.is_zero(proj.apply(f)) == k3.relations().plus(j.generators()).contains(f));
  }
}
