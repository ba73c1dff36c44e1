#include "coisored/core/error.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored {

CompositionResult compose_hamiltonian_schemes(const GroupoidAction& m, const PoissonStructure& pm,
                                              const GroupoidAction& n, const PoissonStructure& pn,
                                              int d, int cap) {
  if (!m.groupoid.factors || !n.groupoid.factors) {
    throw InputError("composition needs actions of product groupoids");
  }
  const AffineGroupoid& i_minus = m.groupoid.factors->right;
  const AffineGroupoid& i = n.groupoid.factors->left;
  if (!same_presentation(i_minus.total, i.total) || !same_presentation(i_minus.base, i.base)) {
    throw InputError("composition: '" + m.label + "' and '" + n.label +
                     "' are not acted on by the same middle groupoid");
  }
  GroupoidAction g_on = extend_action(factor_action(m, 0), n.module, true);
  GroupoidAction im_on = extend_action(factor_action(m, 1), n.module, true);
  GroupoidAction i_on = extend_action(factor_action(n, 0), m.module, false);
  GroupoidAction k_on = extend_action(factor_action(n, 1), m.module, false);
  GroupoidAction outer = product_action(g_on, k_on);
  GroupoidAction inner = product_action(im_on, i_on);
  TensorProduct tp = tensor_product({m.module, n.module}, {kLeftPrefix, kRightPrefix});
  PoissonStructure p_mn = product_structure({pm.over(m.module), pn.over(n.module)}, tp);
  Subgroupoid h = diagonal_stabilizer(i);
  ResidualResult res = residual_action(outer, inner, h, p_mn.over(outer.module), d, cap);
  return CompositionResult{std::move(res), std::move(outer)};
}

GroupoidAction unit_bimodule(const AffineGroupoid& i) {
  GroupoidAction out = product_action(left_mult_action(i), right_mult_action(negate(i)));
  out.label = i.label + " bimodule";
  return out;
}

CheckReport check_unit_composition(const CompositionResult& c, const GroupoidAction& m,
                                   const PoissonStructure& pm) {
  CheckReport report("unit composition: " + m.label);
  const ReductionResult& red = c.residual.reduction;
  const PresentedAlgebra& fiber = red.fiber_action.module;
  const AffineGroupoid& i_minus = m.groupoid.factors->right;
  GroupoidAction m_i = factor_action(m, 1);

  // psi(f)(m, h) = f(h^-1 . m): the I^- action on M evaluated at the inverse of the N point.
  std::map<std::string, Polynomial> into_fiber;
  for (std::size_t k = 0; k < i_minus.total.size(); ++k) {
    into_fiber.emplace("L_" + i_minus.total.ring()->name(k),
                       rename(i_minus.inv.image(k), fiber.ring(),
                              [](const std::string& v) { return "R_" + v; }));
  }
  for (const auto& v : m.module.variables()) into_fiber.emplace("R_" + v, fiber.var("L_" + v));
  std::vector<Polynomial> psi_images;
  for (std::size_t k = 0; k < m.module.size(); ++k) {
    Polynomial image = fiber.normal_form(substitute(m_i.act.image(k), into_fiber, fiber.ring()));
    auto expr = subalgebra_express(image, red.generators, fiber.relations());
    if (!expr) {
      report.fail("psi lands in the invariants", Witness{m.module.ring()->name(k), image.to_string()});
      return report;
    }
    psi_images.push_back(rebase(*expr, red.reduced.ring()));
  }
  report.pass("psi lands in the invariants");
  AlgebraMorphism psi(m.module, red.reduced, psi_images);

  // phi evaluates the N point at the identity arrow over the moment of M.
  std::map<std::string, Polynomial> at_identity;
  for (const auto& v : m.module.variables()) at_identity.emplace("L_" + v, m.module.var(v));
  std::map<std::string, Polynomial> i_moment;
  for (const auto& y : i_minus.base.variables()) i_moment.emplace(y, m.moment.image("R_" + y));
  for (std::size_t k = 0; k < i_minus.total.size(); ++k) {
    at_identity.emplace("R_" + i_minus.total.ring()->name(k),
                        substitute(i_minus.unit.image(k), i_moment, m.module.ring()));
  }
  std::vector<Polynomial> phi_images;
  for (const auto& t : red.generators) {
    phi_images.push_back(substitute(t.generator, at_identity, m.module.ring()));
  }
  AlgebraMorphism phi(red.reduced, m.module, phi_images);

  auto well_defined = [&report](const std::string& name, const AlgebraMorphism& f) {
    if (auto w = morphism_failure(f)) {
      report.fail(name, *w);
    } else {
      report.pass(name);
    }
  };
  well_defined("psi well-defined", psi);
  well_defined("phi well-defined", phi);
  check_equal_on_generators(report, "phi after psi is the identity", compose(psi, phi),
                            AlgebraMorphism::identity(m.module));
  check_equal_on_generators(report, "psi after phi is the identity", compose(phi, psi),
                            AlgebraMorphism::identity(red.reduced));
  if (auto w = poisson_morphism_failure(pm.over(m.module), red.reduced_poisson, psi, +1)) {
    report.fail("psi is Poisson", *w);
  } else {
    report.pass("psi is Poisson");
  }
  return report;
}

}  // namespace coisored
