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
};

GroupoidAction torus_action(const AffineGroupoid& t, const PresentedAlgebra& m, const std::string& moment,
                            const std::vector<std::string>& act) {
  auto d = ring_of({"L_t", "L_u", "L_z", "R_q1", "R_q2", "R_p1", "R_p2"});
  return make_action("act", t, m, {P(m.ring(), moment)}, Ps(d, act));
}

}  // namespace

TEST_CASE("check_action examples") {
  Flagship f;
  CHECK(check_action(f.a).passed());
  CHECK(check_action(base_action(f.t)).passed());
  auto wrong = torus_action(f.t, f.m, "q1*p1 - q2*p2", {"L_t*R_q1", "L_u*R_q2", "L_u*R_p1", "L_u*R_p2"});
  CheckReport r = check_action(wrong);
  CHECK(!r.item("(i) moment equivariance").passed);
}

TEST_CASE("invariance examples") {
  Flagship f;
  CHECK(check_invariant(f.a, f.m.constant(5)));
  CHECK(check_invariant(f.a, f.m.parse("q1*q2")));
  CHECK(!check_invariant(f.a, f.m.parse("q1")));
  CHECK(check_invariant(f.a, f.a.moment.image(0)));
  CHECK(check_invariant(f.a, f.a.moment.image(0).pow(3)));
}

TEST_CASE("equivariance examples") {
  Flagship f;
  CHECK(check_equivariant(f.a, f.a, AlgebraMorphism::identity(f.m)));
  // Constant rescalings commute with the torus and fix the moment.
  AlgebraMorphism scale(f.m, f.m, Ps(f.m.ring(), {"2*q1", "q2", "1/2*p1", "p2"}));
  CHECK(check_equivariant(f.a, f.a, scale));
  AlgebraMorphism swap(f.m, f.m, Ps(f.m.ring(), {"q2", "q1", "p1", "p2"}));
  CHECK(!check_equivariant(f.a, f.a, swap));
  // q1 <-> p2, q2 <-> p1 keeps weights and negates the moment.
  AlgebraMorphism psi(f.m, f.m, Ps(f.m.ring(), {"p2", "p1", "q2", "q1"}));
  auto flipped = torus_action(f.t, f.m, "q2*p2 - q1*p1", {"L_t*R_q1", "L_u*R_q2", "L_u*R_p1", "L_t*R_p2"});
  CHECK(!check_equivariant(f.a, f.a, psi));
  CHECK(check_equivariant(flipped, f.a, psi));
}

TEST_CASE("restriction examples") {
  Flagship f;
  Subgroupoid h = isotropy_subgroupoid(f.t, {f.t.base.var("z")}, true);
  GroupoidAction r = restrict_action(f.a, h);
  CHECK(check_action(r).passed());
  CHECK(r.module.is_zero(r.module.parse("q1*p1 - q2*p2")));
  CHECK(!r.module.is_zero(r.module.parse("q1*p1")));
  GroupoidAction whole = restrict_action(f.a, full_subgroupoid(f.t));
  CHECK(same_presentation(whole.module, f.m));
  CHECK(whole.act.images() == f.a.act.images());
  GroupoidAction unit = restrict_action(f.a, unit_subgroupoid(f.t, {f.t.base.var("z")}));
  CHECK(check_action(unit).passed());
  for (std::size_t i = 0; i < unit.module.size(); ++i) {
    CHECK(unit.domain.result.equal(unit.act.image(i), unit.domain.right(unit.module.var(i))));
  }
}

TEST_CASE("graph ideal examples") {
  Flagship f;
  GraphIdeal g = graph_ideal(f.a);
  // One moment-matching generator plus one per module variable, besides block relations.
  const std::size_t block = f.t.total.relations().generators().size();
  CHECK(g.ideal.generators().size() == block + 1 + 4);
  AffineGroupoid triv = trivial_groupoid();
  GroupoidAction ta = base_action(triv);
  CHECK(graph_ideal(ta).ideal.generators().empty());
}

TEST_CASE("Hamiltonian examples") {
  Flagship f;
  CheckReport r = check_hamiltonian(f.a, f.pm);
  CHECK(r.passed());
  CheckReport z = check_hamiltonian(f.a, PoissonStructure::zero(f.m));
  CHECK(z.item(kMomentPoisson).passed);
  CHECK(!z.item(kLiftedBrackets).passed);
  CHECK(!z.item(kGraphCoisotropic).passed);
  // The trivial groupoid acting trivially on a Poisson module.
  auto tm = extend_action(base_action(trivial_groupoid()), f.m, false);
  auto ptm = product_structure(f.pm, PoissonStructure::zero(PresentedAlgebra::point())).over(tm.module);
  CHECK(check_action(tm).passed());
  CHECK(check_hamiltonian(tm, ptm).passed());
}

TEST_CASE("commuting and product actions") {
  Flagship f;
  AffineGroupoid t = f.t;
  auto a = torus_action(t, f.m, "q1*p1", {"L_t*R_q1", "R_q2", "L_u*R_p1", "R_p2"});
  auto b = torus_action(t, f.m, "q2*p2", {"R_q1", "L_t*R_q2", "R_p1", "L_u*R_p2"});
  CHECK(check_commuting(a, b).passed());
  GroupoidAction ab = product_action(a, b);
  CHECK(check_action(ab).passed());
  CHECK(check_hamiltonian(ab, f.pm).passed());
  GroupoidAction left = factor_action(ab, 0);
  CHECK(check_action(left).passed());
  CHECK(check_equivariant(left, a, AlgebraMorphism::identity(f.m)));
  CHECK(check_equivariant(factor_action(ab, 1), b, AlgebraMorphism::identity(f.m)));

  auto shear = torus_action(t, f.m, "0", {"R_q1 + L_t*R_q2 - R_q2", "L_t*R_q2", "R_p1", "R_p2"});
  CHECK(check_action(shear).passed());
  CHECK(!check_commuting(a, shear).passed());
  CHECK_THROWS_AS(product_action(a, shear), VerificationError);

  auto qp = PresentedAlgebra::free({"q", "p"}, "X");
  auto pq = PoissonStructure::from_brackets(qp, {{"q", "p", qp.constant(1)}});
  AffineGroupoid pg = pair_groupoid(qp, pq);
  GroupoidAction pb = base_action(pg);
  CHECK(!check_commuting(pb, pb).passed());
}

TEST_CASE("multiplication actions") {
  AffineGroupoid t = cotangent_groupoid_torus(1);
  CHECK(check_action(left_mult_action(t)).passed());
  CHECK(check_action(right_mult_action(t)).passed());
  CHECK(check_hamiltonian(left_mult_action(t), t.total_poisson()).passed());
  CHECK(check_hamiltonian(right_mult_action(t), negate(t.total_poisson())).passed());
}

TEST_CASE("invariants form an algebra and pull back along equivariant maps") {
  std::mt19937_64 rng(37);
  Flagship f;
  auto inv = invariants_up_to_degree(f.a, 2);
  std::vector<Polynomial> basis;
  for (const auto& layer : inv.per_degree) basis.insert(basis.end(), layer.begin(), layer.end());
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int k = 0; k < 20; ++k) {
    Polynomial x = basis[pick(rng)].scaled(c(rng)) + basis[pick(rng)];
    Polynomial y = basis[pick(rng)] + basis[pick(rng)].scaled(c(rng));
    CHECK(check_invariant(f.a, x + y));
    CHECK(check_invariant(f.a, x * y));
  }
  // Weight-preserving substitutions carry invariants to invariants.
  AlgebraMorphism psi(f.m, f.m, Ps(f.m.ring(), {"p2", "p1", "q2", "q1"}));
  for (int k = 0; k < 10; ++k) {
    Polynomial x = basis[pick(rng)] * basis[pick(rng)];
    CHECK(check_invariant(f.a, psi.apply(x)));
  }
}
