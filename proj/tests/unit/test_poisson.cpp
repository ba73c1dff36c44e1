#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace coisored;
using namespace coisored::testing;

namespace {

PresentedAlgebra qp() { return PresentedAlgebra::free({"q", "p"}, "X"); }

PoissonStructure canonical_qp() {
  auto x = qp();
  return PoissonStructure::from_brackets(x, {{"q", "p", x.constant(1)}});
}

PoissonStructure sl2() {
  auto a = PresentedAlgebra::free({"a", "b", "c"}, "sl2");
  return PoissonStructure::from_brackets(
      a, {{"a", "b", a.parse("-b")}, {"a", "c", a.parse("c")}, {"b", "c", a.parse("2*a")}});
}

}  // namespace

TEST_CASE("bracket examples") {
  auto p = canonical_qp();
  const auto& x = p.algebra();
  CHECK(p.bracket(x.parse("q^2"), x.parse("p")) == x.parse("2*q"));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    Polynomial f = random_poly(rng, x.ring(), 4, 3);
    CHECK(p.bracket(f, x.constant(1)).is_zero());
    CHECK(p.bracket(f, f).is_zero());
  }
}

TEST_CASE("constructor enforces antisymmetry and the Poisson ideal condition") {
  auto x = qp();
  CHECK_THROWS_AS(PoissonStructure(x, {x.zero(), x.constant(1), x.constant(1), x.zero()}), InputError);
  CHECK_THROWS_AS(PoissonStructure::from_brackets(x, {{"q", "q", x.constant(1)}}), InputError);
  // {q, p} = 1 does not preserve <q>: {p, q} = -1.
  PresentedAlgebra line(x.ring(), {x.parse("q")}, "line");
  CHECK_THROWS_AS(PoissonStructure::from_brackets(line, {{"q", "p", line.constant(1)}}), InputError);
}

TEST_CASE("Jacobi examples") {
  auto x = PresentedAlgebra::free({"x", "y", "z"}, "K");
  CHECK(check_jacobi(PoissonStructure::from_brackets(x, {{"x", "y", x.constant(3)}, {"y", "z", x.constant(-1)}})));
  CHECK(check_jacobi(sl2()));
  // Brute-force cyclic sum for {x,y}=y, {y,z}=z, {z,x}=x:
  // {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = {x,z} + {y,x} + {z,y} = -x - y - z.
  PoissonStructure cyc = PoissonStructure::unchecked(
      x, {x.zero(), x.parse("y"), x.parse("-x"), x.parse("-y"), x.zero(), x.parse("z"),
          x.parse("x"), x.parse("-z"), x.zero()});
  CHECK(!check_jacobi(cyc));
  auto w = jacobi_failure(cyc);
  REQUIRE(w);
  CHECK(w->residue == "-x - y - z");
}

TEST_CASE("coisotropy examples") {
  auto p = canonical_qp();
  auto pp = product_structure(negate(p), p);
  const auto& xx = pp.algebra();
  CHECK(check_coisotropic(pp, Ideal(xx.ring(), {xx.parse("L_q - R_q"), xx.parse("L_p - R_p")})));
  const auto& x = p.algebra();
  CHECK(check_coisotropic(p, Ideal(x.ring(), {x.parse("p")})));
  CHECK(!check_coisotropic(p, Ideal(x.ring(), {x.parse("q"), x.parse("p")})));
}

TEST_CASE("Poisson morphism examples") {
  auto p = canonical_qp();
  CHECK(check_poisson_morphism(p, p, AlgebraMorphism::identity(p.algebra()), 1));
  auto k4 = canonical_k4();
  auto pm = canonical_bracket(k4);
  auto zb = PresentedAlgebra::free({"z"}, "Z");
  AlgebraMorphism mu(zb, k4, {k4.parse("q1*p1 - q2*p2")});
  CHECK(check_poisson_morphism(PoissonStructure::zero(zb), pm, mu, 1));
  auto pp = product_structure(negate(p), p);
  AlgebraMorphism left(p.algebra(), pp.algebra(), {pp.algebra().var("L_q"), pp.algebra().var("L_p")});
  CHECK(!check_poisson_morphism(p, pp, left, 1));
  CHECK(check_poisson_morphism(p, pp, left, -1));
}

TEST_CASE("negate and product examples") {
  auto p = canonical_qp();
  CHECK(negate(negate(p)).matrix() == p.matrix());
  auto zb = PresentedAlgebra::free({"z"}, "Z");
  auto pz = product_structure(p, PoissonStructure::zero(zb));
  const auto& a = pz.algebra();
  CHECK(pz.bracket(a.var("L_q"), a.var("R_z")).is_zero());
  CHECK(pz.bracket(a.var("L_q"), a.var("L_p")) == a.constant(1));
  auto pp = product_structure(p, negate(p));
  const auto& b = pp.algebra();
  CHECK(pp.bracket(b.parse("L_q - R_q"), b.parse("L_p - R_p")).is_zero());
}

TEST_CASE("bracket determinant and unit test") {
  auto t = cotangent_groupoid_torus(1);
  Polynomial det = bracket_determinant(t.total_poisson(), {"t", "z"});
  CHECK(det == t.total.parse("t^2"));
  CHECK(is_unit_modulo(t.total, det));
  auto x = qp();
  CHECK(!is_unit_modulo(x, x.parse("q")));
  CHECK(is_unit_modulo(x, x.constant(-2)));
}

TEST_CASE("Leibniz rule and well-definedness on the quotient") {
  std::mt19937_64 rng(5);
  auto t = cotangent_groupoid_torus(1);
  const auto& p = t.total_poisson();
  const auto& a = p.algebra();
  const Polynomial rel = a.relations().generators()[0];
  for (int k = 0; k < 30; ++k) {
    Polynomial f = random_poly(rng, a.ring(), 3, 2);
    Polynomial g = random_poly(rng, a.ring(), 3, 2);
    Polynomial h = random_poly(rng, a.ring(), 3, 2);
    CHECK(a.equal(p.bracket(f, g * h), p.bracket(f, g) * h + g * p.bracket(f, h)));
    CHECK(a.equal(p.bracket(f, g), -p.bracket(g, f)));
    Polynomial r = random_poly(rng, a.ring(), 2, 2) * rel;
    CHECK(a.equal(p.bracket(f + r, g), p.bracket(f, g)));
  }
}

TEST_CASE("Jacobi holds on random elements of a Poisson algebra") {
  std::mt19937_64 rng(9);
  auto p = sl2();
  const auto& a = p.algebra();
  for (int k = 0; k < 15; ++k) {
    Polynomial f = random_poly(rng, a.ring(), 3, 2);
    Polynomial g = random_poly(rng, a.ring(), 3, 2);
    Polynomial h = random_poly(rng, a.ring(), 3, 2);
    Polynomial s = p.bracket(f, p.bracket(g, h)) + p.bracket(g, p.bracket(h, f)) +
                   p.bracket(h, p.bracket(f, g));
    CHECK(a.is_zero(s));
  }
}

TEST_CASE("coisotropy does not depend on the generating set") {
  auto k4 = canonical_k4();
  auto pm = canonical_bracket(k4);
  const std::vector<std::vector<std::string>> ideals = {
      {"q1*p1 - q2*p2"}, {"q1", "q2"}, {"q1", "p1"}, {"q1*q2", "q1^2 - p2"}, {"q1*p1", "q2*p2"}};
  for (const auto& gens : ideals) {
    Ideal i(k4.ring(), Ps(k4.ring(), gens));
    Ideal regen(k4.ring(), i.basis(MonomialOrder::lex()));
    CHECK(check_coisotropic(pm, i) == check_coisotropic(pm, regen));
  }
}

TEST_CASE("anti-Poisson maps compose to Poisson maps") {
  std::mt19937_64 rng(19);
  auto p = canonical_qp();
  const auto& x = p.algebra();
  for (int k = 0; k < 10; ++k) {
    // Linear symplectic maps with determinant -1 are anti-Poisson for {q, p} = 1.
    std::uniform_int_distribution<int> d(-3, 3);
    const int a = d(rng), b = d(rng);
    AlgebraMorphism f(x, x, {x.parse("p"), x.parse("q")});
    AlgebraMorphism g(x, x, {x.var("q") + x.var("p").scaled(a), x.var("p").scaled(-1)});
    AlgebraMorphism h(x, x, {x.var("q").scaled(-1), x.var("p") + x.var("q").scaled(b)});
    REQUIRE(check_poisson_morphism(p, p, f, -1));
    REQUIRE(check_poisson_morphism(p, p, g, -1));
    REQUIRE(check_poisson_morphism(p, p, h, -1));
    CHECK(check_poisson_morphism(p, p, compose(f, g), 1));
    CHECK(check_poisson_morphism(p, p, compose(g, h), 1));
  }
}
