#include "coisored/groupoid/groupoid.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

namespace {

std::vector<Polynomial> rebase_all(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(rebase(p, ring));
  return out;
}

void check_well_defined(CheckReport& report, const std::string& name, const AlgebraMorphism& phi) {
  if (auto w = morphism_failure(phi)) {
    report.fail(name, *w);
  } else {
    report.pass(name);
  }
}

// Runs a check that builds mediating morphisms; a disagreement on the base is a failure.
template <typename F>
void guarded(CheckReport& report, const std::string& name, F&& body) {
  try {
    body();
  } catch (const InputError& e) {
    report.fail(name, Witness{"-", e.what()});
  }
}

}  // namespace

const PoissonStructure& AffineGroupoid::total_poisson() const {
  if (!symplectic) throw InputError("groupoid '" + label + "' carries no Poisson structure");
  return symplectic->total;
}

const PoissonStructure& AffineGroupoid::base_poisson() const {
  if (!symplectic) throw InputError("groupoid '" + label + "' carries no Poisson structure");
  return symplectic->base;
}

FiberedCoproduct composable_pairs(const PresentedAlgebra& base, const PresentedAlgebra& total,
                                  const AlgebraMorphism& src, const AlgebraMorphism& tgt) {
  return fibered_coproduct(total, total, base, src, tgt, total.label() + " x_s,t " + total.label());
}

AffineGroupoid make_groupoid(std::string label, PresentedAlgebra base, PresentedAlgebra total,
                             std::vector<Polynomial> src, std::vector<Polynomial> tgt,
                             std::vector<Polynomial> unit, std::vector<Polynomial> inv,
                             std::vector<Polynomial> mult) {
  if (src.size() != base.size() || tgt.size() != base.size()) {
    throw InputError("groupoid '" + label + "': source and target need one image per base variable");
  }
  if (unit.size() != total.size() || inv.size() != total.size() || mult.size() != total.size()) {
    throw InputError("groupoid '" + label +
                     "': unit, inverse and multiplication need one image per total variable");
  }
  AlgebraMorphism s(base, total, rebase_all(src, total.ring()));
  AlgebraMorphism t(base, total, rebase_all(tgt, total.ring()));
  AlgebraMorphism u(total, base, rebase_all(unit, base.ring()));
  AlgebraMorphism i(total, total, rebase_all(inv, total.ring()));
  FiberedCoproduct fc = composable_pairs(base, total, s, t);
  AlgebraMorphism m(total, fc.result, rebase_all(mult, fc.result.ring()));
  return AffineGroupoid{std::move(label), std::move(base), std::move(total), s, t, u, i, fc, m,
                        std::nullopt, nullptr};
}

AffineGroupoid with_symplectic(AffineGroupoid g, PoissonStructure total, PoissonStructure base,
                               std::vector<std::string> chart) {
  if (!same_ring(total.algebra().ring(), g.total.ring()) ||
      !same_ring(base.algebra().ring(), g.base.ring())) {
    throw InputError("groupoid '" + g.label + "': Poisson structures over the wrong variables");
  }
  if (chart.empty()) chart = g.total.variables();
  for (const auto& v : chart) g.total.ring()->require(v);
  g.symplectic = SymplecticData{total.over(g.total), base.over(g.base), std::move(chart)};
  return g;
}

CheckReport check_groupoid_axioms(const AffineGroupoid& g) {
  CheckReport report("groupoid axioms: " + g.label);
  const FiberedCoproduct& fc = g.composable;
  AlgebraMorphism id_g = AlgebraMorphism::identity(g.total);
  AlgebraMorphism id_x = AlgebraMorphism::identity(g.base);

  check_well_defined(report, "source well-defined", g.src);
  check_well_defined(report, "target well-defined", g.tgt);
  check_well_defined(report, "unit well-defined", g.unit);
  check_well_defined(report, "inverse well-defined", g.inv);
  check_well_defined(report, "multiplication well-defined", g.mult);

  check_equal_on_generators(report, "source of product", compose(g.src, g.mult),
                            compose(g.src, fc.right_inclusion));
  check_equal_on_generators(report, "target of product", compose(g.tgt, g.mult),
                            compose(g.tgt, fc.left_inclusion));
  check_equal_on_generators(report, "source of unit", compose(g.src, g.unit), id_x);
  check_equal_on_generators(report, "target of unit", compose(g.tgt, g.unit), id_x);

  AlgebraMorphism unit_at_target = compose(g.unit, g.tgt);
  AlgebraMorphism unit_at_source = compose(g.unit, g.src);
  guarded(report, "left unit law", [&] {
    check_equal_on_generators(report, "left unit law",
                              compose(g.mult, mediate(fc, unit_at_target, id_g)), id_g);
  });
  guarded(report, "right unit law", [&] {
    check_equal_on_generators(report, "right unit law",
                              compose(g.mult, mediate(fc, id_g, unit_at_source)), id_g);
  });
  guarded(report, "left inverse law", [&] {
    check_equal_on_generators(report, "left inverse law",
                              compose(g.mult, mediate(fc, g.inv, id_g)), unit_at_source);
  });
  guarded(report, "right inverse law", [&] {
    check_equal_on_generators(report, "right inverse law",
                              compose(g.mult, mediate(fc, id_g, g.inv)), unit_at_target);
  });
  check_equal_on_generators(report, "inverse swaps source and target", compose(g.src, g.inv),
                            g.tgt);
  check_equal_on_generators(report, "inverse involutive", compose(g.inv, g.inv), id_g);

  guarded(report, "coassociativity", [&] {
    // Triples (g1, (g2, g3)): L_* for g1, R_L_* for g2, R_R_* for g3.
    AlgebraMorphism left_of_pair = compose(g.tgt, fc.left_inclusion);
    FiberedCoproduct triples =
        fibered_coproduct(g.total, fc.result, g.base, g.src, left_of_pair, "triples");
    AlgebraMorphism into_pair = compose(g.mult, triples.right_inclusion);
    AlgebraMorphism first_then = mediate(fc, triples.left_inclusion, into_pair);
    AlgebraMorphism iota12 =
        mediate(fc, triples.left_inclusion, compose(fc.left_inclusion, triples.right_inclusion));
    AlgebraMorphism then_third = mediate(fc, compose(g.mult, iota12),
                                         compose(fc.right_inclusion, triples.right_inclusion));
    check_equal_on_generators(report, "coassociativity", compose(g.mult, first_then),
                              compose(g.mult, then_third));
  });
  return report;
}

MultiplicationGraph multiplication_graph(const AffineGroupoid& g) {
  // Block order: the product copy first, so it is eliminated by the membership order.
  TensorProduct amb = tensor_product({g.total, g.total, g.total}, {"P_", "A_", "B_"},
                                     "graph of multiplication of " + g.label);
  const RingPtr& ring = amb.result.ring();
  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < g.base.size(); ++c) {
    gens.push_back(amb.inclusions[1].apply(g.src.image(c)) - amb.inclusions[2].apply(g.tgt.image(c)));
  }
  auto to_factors = [](const std::string& name) {
    if (name.rfind(kLeftPrefix, 0) == 0) return "A_" + name.substr(2);
    return "B_" + name.substr(2);
  };
  for (std::size_t h = 0; h < g.total.size(); ++h) {
    gens.push_back(amb.inclusions[0].apply(g.total.var(h)) - rename(g.mult.image(h), ring, to_factors));
  }
  Ideal ideal = amb.result.relations().plus(gens).with_membership_order(MonomialOrder::block(
      g.total.size(), MonomialOrder::grevlex(), MonomialOrder::grevlex()));
  return MultiplicationGraph{std::move(amb), std::move(ideal)};
}

CheckReport check_symplectic(const AffineGroupoid& g) {
  CheckReport report("symplectic groupoid: " + g.label);
  if (!g.symplectic) {
    report.fail("Poisson data present", Witness{"-", "no Poisson structure attached"});
    return report;
  }
  const SymplecticData& sd = *g.symplectic;
  if (auto w = jacobi_failure(sd.total)) {
    report.fail("total bracket Jacobi", *w);
  } else {
    report.pass("total bracket Jacobi");
  }
  if (auto w = poisson_morphism_failure(sd.base, sd.total, g.tgt, +1)) {
    report.fail("target is Poisson", *w);
  } else {
    report.pass("target is Poisson");
  }
  if (auto w = poisson_morphism_failure(sd.base, sd.total, g.src, -1)) {
    report.fail("source is anti-Poisson", *w);
  } else {
    report.pass("source is anti-Poisson");
  }
  MultiplicationGraph graph = multiplication_graph(g);
  PoissonStructure on_graph =
      product_structure({negate(sd.total), sd.total, sd.total}, graph.ambient);
  if (auto w = coisotropy_failure(on_graph, graph.ideal)) {
    report.fail("multiplication graph coisotropic", *w);
  } else {
    report.pass("multiplication graph coisotropic");
  }
  Polynomial det = bracket_determinant(sd.total, sd.chart);
  if (is_unit_modulo(g.total, det)) {
    report.pass("bracket determinant is a unit", "det = " + g.total.normal_form(det).to_string());
  } else {
    report.fail("bracket determinant is a unit",
                Witness{"det", g.total.normal_form(det).to_string()});
  }
  return report;
}

}  // namespace coisored
