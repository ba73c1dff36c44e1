#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace coisored;
using namespace coisored::testing;

namespace {

struct Flagship {
  AffineGroupoid t = cotangent_groupoid_torus(1);
  PresentedAlgebra m = canonical_k4();
  PoissonStructure pm = canonical_bracket(m);
  GroupoidAction a = flagship_action(t, m);
  Subgroupoid h = isotropy_subgroupoid(t, {t.base.var("z")}, true);
};

GroupoidAction torus_action(const AffineGroupoid& t, const PresentedAlgebra& m, const std::string& label,
                            const std::string& moment, const std::vector<std::string>& act) {
  auto d = ring_of({"L_t", "L_u", "L_z", "R_q1", "R_q2", "R_p1", "R_p2"});
  return make_action(label, t, m, {P(m.ring(), moment)}, Ps(d, act));
}

std::vector<std::string> names(const std::vector<Tag>& tags) {
  std::vector<std::string> out;
  for (const auto& t : tags) out.push_back(t.name);
  return out;
}

// Brackets of the lifts computed directly in k[M], projected to the fiber, against
// the reduced structure pushed through the projection.
bool brackets_match_lifts(const ReductionResult& r) {
  const PresentedAlgebra& fiber = r.fiber_action.module;
  for (std::size_t i = 0; i < r.lifts.size(); ++i) {
    for (std::size_t j = 0; j < r.lifts.size(); ++j) {
      Polynomial direct = rebase(r.ambient_poisson.raw_bracket(r.lifts[i], r.lifts[j]), fiber.ring());
      Polynomial via = rebase(r.projection.apply(r.reduced_poisson.entry(i, j)), fiber.ring());
      if (!fiber.equal(direct, via)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("invariant examples") {
  Flagship f;
  InvariantBasis fib = invariants_up_to_degree(restrict_action(f.a, f.h), 2);
  CHECK(fib.per_degree.size() == 3);
  CHECK(fib.per_degree[0].size() == 1);
  CHECK(fib.per_degree[1].empty());
  CHECK(fib.per_degree[2].size() == 3);
  REQUIRE(fib.generators.size() == 3);
  CHECK(names(fib.generators) == std::vector<std::string>{"a", "b", "c"});
  CHECK(fib.generators[0].generator == f.m.parse("q1*q2"));
  CHECK(fib.generators[1].generator == f.m.parse("q2*p2"));
  CHECK(fib.generators[2].generator == f.m.parse("p1*p2"));

  InvariantBasis lin = invariants_up_to_degree(f.a, 1);
  CHECK(lin.per_degree[0].size() == 1);
  CHECK(lin.per_degree[1].empty());
  CHECK(lin.generators.empty());
  InvariantBasis amb = invariants_up_to_degree(f.a, 2);
  CHECK(amb.per_degree[2].size() == 4);
  CHECK(amb.generators.size() == 4);
  CHECK_THROWS_AS(invariants_up_to_degree(f.a, 0), InputError);
}

TEST_CASE("invariant dimensions match weight counting") {
  // Weight of q1^i q2^j p1^k p2^l is i - j - k + l; invariants are the weight-zero monomials.
  Flagship f;
  InvariantBasis inv = invariants_up_to_degree(f.a, 4);
  for (int e = 0; e <= 4; ++e) {
    std::size_t expected = 0;
    for (int i = 0; i <= e; ++i) {
      for (int j = 0; i + j <= e; ++j) {
        for (int k = 0; i + j + k <= e; ++k) {
          const int l = e - i - j - k;
          if (i - j - k + l == 0) ++expected;
        }
      }
    }
    CHECK(inv.per_degree[static_cast<std::size_t>(e)].size() == expected);
    for (const auto& p : inv.per_degree[static_cast<std::size_t>(e)]) CHECK(check_invariant(f.a, p));
  }
}

TEST_CASE("tag names skip module variables") {
  CHECK(tag_name(0, {}) == "a");
  CHECK(tag_name(0, {"a"}) == "b");
  CHECK(tag_name(1, {"b"}) == "c");
  CHECK(tag_name(25, {}) != tag_name(26, {}));
}

TEST_CASE("present_reduced examples") {
  auto x = PresentedAlgebra::free({"x"}, "k[x]");
  auto [red, proj] = present_reduced(x, {Tag{"a", x.var("x")}, Tag{"b", x.parse("x^2")}});
  CHECK(red.variables() == std::vector<std::string>{"a", "b"});
  CHECK(red.is_zero(red.parse("b - a^2")));
  CHECK(!red.is_zero(red.parse("b")));
  CHECK(check_morphism(proj));

  auto [circ, cp] = present_reduced(x, {Tag{"a", x.parse("x^2")}, Tag{"b", x.parse("x^3")}});
  CHECK(circ.is_zero(circ.parse("a^3 - b^2")));
  CHECK(circ.relations().basis(MonomialOrder::grevlex()).size() == 1);
  CHECK(check_morphism(cp));
}

TEST_CASE("flagship reduction") {
  Flagship f;
  ReductionResult r = reduce_restricted(f.a, f.h, f.pm, 2);
  CHECK(r.reduced.variables() == std::vector<std::string>{"a", "b", "c"});
  CHECK(r.reduced.is_zero(r.reduced.parse("b^2 - a*c")));
  CHECK(r.reduced.relations().basis(MonomialOrder::grevlex()).size() == 1);
  CHECK(r.reduced_poisson.bracket(r.reduced.var("a"), r.reduced.var("b")) == r.reduced.var("a"));
  CHECK(r.reduced_poisson.bracket(r.reduced.var("a"), r.reduced.var("c")) == r.reduced.parse("2*b"));
  CHECK(r.reduced_poisson.bracket(r.reduced.var("b"), r.reduced.var("c")) == r.reduced.var("c"));
  CHECK(r.closure_log.empty());
  CHECK(brackets_match_lifts(r));
  CHECK(verify_reduction(r, 10, 1).passed());
  for (int d : {3, 4}) {
    ReductionResult rd = reduce_restricted(f.a, f.h, f.pm, d);
    CHECK(describe(rd).substr(describe(rd).find("generators:")) ==
          describe(r).substr(describe(r).find("generators:")));
  }
  ReductionResult q = reduce_quotient(f.a, {f.t.base.var("z")}, f.pm, 2);
  CHECK(describe(q) == describe(r));
}

TEST_CASE("sabotaged reductions are caught") {
  Flagship f;
  ReductionResult r = reduce_restricted(f.a, f.h, f.pm, 2);

  ReductionResult doubled = r;
  std::vector<Polynomial> m;
  for (const auto& e : r.reduced_poisson.matrix()) m.push_back(e.scaled(2));
  doubled.reduced_poisson = PoissonStructure::unchecked(r.reduced, m);
  CheckReport rd = verify_reduction(doubled, 5, 3);
  CHECK(!rd.item("(a) lift independence").passed);
  CHECK(rd.item("(a) lift independence").witness.has_value());

  // {a, b} = a^2 with the other brackets unchanged breaks Jacobi.
  ReductionResult bent = r;
  std::vector<Polynomial> j = r.reduced_poisson.matrix();
  const std::size_t n = r.reduced.size();
  j[0 * n + 1] = r.reduced.var("a") * r.reduced.var("a");
  j[1 * n + 0] = -j[0 * n + 1];
  bent.reduced_poisson = PoissonStructure::unchecked(r.reduced, j);
  CheckReport rb = verify_reduction(bent, 5, 3);
  CHECK(!rb.passed());
  CHECK(!rb.item("(d) Jacobi").passed);

  ReductionResult wrong_lift = r;
  wrong_lift.lifts[0] = f.m.parse("q1");
  CHECK(!verify_reduction(wrong_lift, 5, 3).item("(b) brackets invariant").passed);
}

TEST_CASE("closure loop cap") {
  // On k[x, y] with {x, y} = 1 and the trivial torus action, starting from x^2 alone
  // the bracket {x^2, y^2} = 4xy is appended; a zero cap refuses.
  AffineGroupoid t = cotangent_groupoid_torus(1);
  auto m = PresentedAlgebra::free({"x", "y"}, "k[x,y]");
  auto pm = PoissonStructure::from_brackets(m, {{"x", "y", m.constant(1)}});
  auto d = ring_of({"L_t", "L_u", "L_z", "R_x", "R_y"});
  GroupoidAction a = make_action("trivial", t, m, {m.zero()}, Ps(d, {"R_x", "R_y"}));
  InvariantBasis inv{a, 2, {}, {Tag{"a", m.parse("x^2")}, Tag{"b", m.parse("y^2")}}};
  ReductionResult r = reduced_bracket(inv, pm);
  CHECK(r.generators.size() == 3);
  CHECK(r.closure_log.size() == 1);
  CHECK(r.generators[2].generator == m.parse("4*x*y"));
  CHECK(brackets_match_lifts(r));
  CHECK_THROWS_AS(reduced_bracket(inv, pm, 0), BudgetExceeded);
}

TEST_CASE("residual action of the second torus") {
  Flagship f;
  GroupoidAction a = torus_action(f.t, f.m, "A", "q1*p1", {"L_t*R_q1", "R_q2", "L_u*R_p1", "R_p2"});
  GroupoidAction b = torus_action(f.t, f.m, "B", "q2*p2", {"R_q1", "L_t*R_q2", "R_p1", "L_u*R_p2"});
  ResidualResult res = residual_action(a, b, f.h, f.pm, 2);
  CHECK(res.report.passed());
  const ReductionResult& r = res.reduction;
  CHECK(r.reduced.variables() == std::vector<std::string>{"a", "b"});
  CHECK(r.generators[0].generator == f.m.var("q1"));
  CHECK(r.generators[1].generator == f.m.var("p1"));
  CHECK(r.reduced.relations().basis(MonomialOrder::grevlex()).empty());
  CHECK(r.reduced_poisson.entry(0, 1) == r.reduced.constant(1));
  CHECK(check_action(res.residual).passed());
  CHECK(res.residual.moment.image(0) == r.reduced.parse("a*b"));
  CHECK(check_hamiltonian(res.residual, r.reduced_poisson).passed());

  GroupoidAction s = torus_action(f.t, f.m, "S", "0", {"R_q1 + L_t*R_q2 - R_q2", "L_t*R_q2", "R_p1", "R_p2"});
  CHECK_THROWS_AS(residual_action(a, s, f.h, f.pm, 2), VerificationError);
}

TEST_CASE("diagonal examples") {
  Flagship f;
  CHECK(check_diagonal_coisotropic(f.pm).passed());
  // Without the sign flip the diagonal is not coisotropic.
  TensorProduct tp = tensor_product({f.m, f.m}, {"L_", "R_"});
  std::vector<Polynomial> gens;
  for (const auto& v : f.m.variables()) gens.push_back(tp.result.var("L_" + v) - tp.result.var("R_" + v));
  CHECK(!check_coisotropic(product_structure({f.pm, f.pm}, tp), Ideal(tp.result.ring(), gens)));

  Subgroupoid diag = diagonal_stabilizer(f.t);
  CHECK(diag.stabilizer_assertion);
  CHECK(check_subgroupoid(diag).passed());
  auto qp = PresentedAlgebra::free({"q", "p"}, "X");
  auto pq = PoissonStructure::from_brackets(qp, {{"q", "p", qp.constant(1)}});
  CHECK(check_subgroupoid(diagonal_stabilizer(pair_groupoid(qp, pq))).passed());
}

TEST_CASE("composition with the unit bimodule") {
  Flagship f;
  AffineGroupoid gm = product_groupoid(trivial_groupoid(), negate(f.t));
  auto d = ring_of({"L_R_t", "L_R_u", "L_R_z", "R_q1", "R_q2", "R_p1", "R_p2"});
  GroupoidAction m = make_action("M", gm, f.m, {P(f.m.ring(), "q1*p1 - q2*p2")},
                                 Ps(d, {"L_R_u*R_q1", "L_R_t*R_q2", "L_R_t*R_p1", "L_R_u*R_p2"}));
  REQUIRE(check_action(m).passed());
  GroupoidAction n = unit_bimodule(f.t);
  CHECK(check_action(n).passed());
  CompositionResult c = compose_hamiltonian_schemes(m, f.pm, n, f.t.total_poisson(), 2);
  CHECK(c.residual.report.passed());
  CHECK(check_unit_composition(c, m, f.pm).passed());
  CHECK_THROWS_AS(compose_hamiltonian_schemes(f.a, f.pm, n, f.t.total_poisson(), 2), InputError);
}
