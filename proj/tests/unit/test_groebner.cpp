#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coisored/groebner/groebner.hpp"
#include "coisored/groebner/linalg.hpp"
#include "support.hpp"

using namespace coisored;
using namespace coisored::testing;

namespace {

const MonomialOrder kLex = MonomialOrder::lex();
const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o) {
  const Term& a = f.leading_term(o);
  const Term& b = g.leading_term(o);
  Monomial l = Monomial::lcm(a.mono, b.mono);
  return f.times_monomial(l / a.mono, 1 / a.coeff) - g.times_monomial(l / b.mono, 1 / b.coeff);
}

// Reducedness and the Buchberger criterion, checked from the definition.
void check_reduced_basis(const std::vector<Polynomial>& basis, const Ideal& ideal,
                         const MonomialOrder& o) {
  Ideal b(ideal.ring(), basis);
  for (const auto& g : ideal.generators()) CHECK(normal_form(g, b, o).is_zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].leading_term(o).coeff == 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms()) CHECK(!basis[j].leading_term(o).mono.divides(t.mono));
      if (i < j) {
        std::vector<std::vector<Term>> sorted;
        for (const auto& g : basis) sorted.push_back(sorted_terms(g, o));
        CHECK(reduce_full(s_polynomial(basis[i], basis[j], o), sorted, o).is_zero());
      }
    }
  }
}

}  // namespace

TEST_CASE("groebner basis examples") {
  auto x = ring_of({"x"});
  for (const auto& o : {kLex, kGrevlex}) {
    CHECK(groebner_basis(Ideal(x, {P(x, "x")}), o) == Ps(x, {"x"}));
  }
  auto xyz = ring_of({"x", "y", "z"});
  Ideal chain(xyz, Ps(xyz, {"x - y", "y - z"}));
  CHECK(groebner_basis(chain, kLex) == Ps(xyz, {"x - z", "y - z"}));
  // (1 - xy)(1 + xy) + y^2 x^2 = 1, so the ideal is the unit ideal.
  auto xy = ring_of({"x", "y"});
  Ideal unit(xy, Ps(xy, {"x^2", "x*y + 1"}));
  CHECK(groebner_basis(unit, kLex) == Ps(xy, {"1"}));
  Polynomial cert = (P(xy, "1 - x*y")) * P(xy, "x*y + 1") + P(xy, "y^2") * P(xy, "x^2");
  CHECK(cert == P(xy, "1"));
}

TEST_CASE("normal form examples") {
  auto x = ring_of({"x"});
  CHECK(normal_form(P(x, "x^2"), Ideal(x, {P(x, "x")}), kGrevlex).is_zero());
  auto xy = ring_of({"x", "y"});
  CHECK(normal_form(P(xy, "x^2 + y"), Ideal(xy, {P(xy, "x - y")}), kLex) == P(xy, "y^2 + y"));
  CHECK(normal_form(P(xy, "1"), Ideal(xy, Ps(xy, {"x", "y"})), kGrevlex) == P(xy, "1"));
}

TEST_CASE("membership examples") {
  auto xy = ring_of({"x", "y"});
  CHECK(ideal_membership(P(xy, "y"), Ideal(xy, Ps(xy, {"x", "x - y"}))));
  CHECK(!ideal_membership(P(xy, "1"), Ideal(xy, Ps(xy, {"x", "y"}))));
  CHECK(ideal_membership(Polynomial(xy), Ideal(xy, Ps(xy, {"x^3 + y"}))));
  CHECK(ideal_membership(Polynomial(xy), Ideal(xy)));
}

TEST_CASE("elimination examples") {
  auto xy = ring_of({"x", "y"});
  Ideal free = elimination_ideal(Ideal(xy, {P(xy, "x - y^2")}), {"y"});
  CHECK(free.generators().empty());
  auto xyz = ring_of({"x", "y", "z"});
  Ideal cubic = elimination_ideal(Ideal(xyz, Ps(xyz, {"y - x^2", "z - x^3"})), {"y", "z"});
  REQUIRE(cubic.generators().size() == 1);
  CHECK(cubic.generators()[0] == P(cubic.ring(), "y^3 - z^2"));
  auto x = ring_of({"x"});
  Ideal same = elimination_ideal(Ideal(x, {P(x, "x")}), {"x"});
  CHECK(same.generators() == Ps(same.ring(), {"x"}));
}

TEST_CASE("subalgebra_express examples") {
  auto xy = ring_of({"x", "y"});
  auto a = subalgebra_express(P(xy, "x^2*y^2"), {{"a", P(xy, "x*y")}}, Ideal(xy));
  REQUIRE(a);
  CHECK(*a == P(a->ring(), "a^2"));
  auto x = ring_of({"x"});
  CHECK(!subalgebra_express(P(x, "x"), {{"a", P(x, "x^2")}}, Ideal(x)));
  auto k4 = canonical_k4().ring();
  auto e = subalgebra_express(P(k4, "q1*p1"), {{"a", P(k4, "q2*p2")}},
                              Ideal(k4, {P(k4, "q1*p1 - q2*p2")}));
  REQUIRE(e);
  CHECK(*e == P(e->ring(), "a"));
}

TEST_CASE("budget exhaustion is an explicit error") {
  auto r = ring_of({"x", "y", "z"});
  Ideal i(r, Ps(r, {"x^3 - y*z + 1", "y^3 - x*z", "z^3 - x*y + 2"}));
  CHECK_THROWS_AS(buchberger(i.generators(), r, kLex, 2), BudgetExceeded);
}

TEST_CASE("linear algebra kernel") {
  RationalMatrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  RationalMatrix k = nullspace(m, 3);
  REQUIRE(k.size() == 1);
  for (const auto& row : m) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * k[0][j];
    CHECK(s == 0);
  }
}

TEST_CASE("random ideals: bases are reduced and canonical, normal forms absorb the ideal") {
  std::mt19937_64 rng(23);
  auto r = ring_of({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + trial % 2; ++k) {
      Polynomial g = random_poly(rng, r, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    Ideal ideal(r, gens);
    for (const auto& o : {kLex, kGrevlex}) {
      const auto basis = groebner_basis(ideal, o);
      check_reduced_basis(basis, ideal, o);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(groebner_basis(Ideal(r, shuffled), o) == basis);
      Polynomial f = random_poly(rng, r, 4, 3);
      const Polynomial nf = normal_form(f, ideal, o);
      for (const auto& g : gens) {
        Polynomial h = random_poly(rng, r, 2, 2);
        CHECK(normal_form(f + h * g, ideal, o) == nf);
      }
      CHECK(ideal_membership(f - nf, ideal));
    }
  }
}

TEST_CASE("random elimination: kept variables only, members of the original ideal") {
  std::mt19937_64 rng(29);
  auto r = ring_of({"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Ideal ideal(r, {random_poly(rng, r, 3, 2), random_poly(rng, r, 3, 2)});
    Ideal e = elimination_ideal(ideal, {"y", "z"});
    CHECK(e.ring()->names() == std::vector<std::string>{"y", "z"});
    for (const auto& g : e.generators()) CHECK(ideal_membership(rebase(g, r), ideal));
  }
}

TEST_CASE("subalgebra_express is sound on random inputs") {
  std::mt19937_64 rng(31);
  auto r = ring_of({"x", "y"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Tag> tags{{"a", random_poly(rng, r, 2, 2)}, {"b", random_poly(rng, r, 2, 2)}};
    Ideal rel(r, {random_poly(rng, r, 2, 3)});
    // Half the time f is built from the tags, so expression must succeed.
    auto tr = ring_of({"a", "b"});
    Polynomial p = random_poly(rng, tr, 3, 2);
    Polynomial f = trial % 2 ? substitute(p, std::vector<Polynomial>{tags[0].generator, tags[1].generator}, r)
                             : random_poly(rng, r, 3, 3);
    auto e = subalgebra_express(f, tags, rel);
    if (trial % 2) REQUIRE(e);
    if (e) {
      Polynomial back = substitute(*e, std::vector<Polynomial>{tags[0].generator, tags[1].generator}, r);
      CHECK(ideal_membership(f - back, rel));
    }
  }
}
