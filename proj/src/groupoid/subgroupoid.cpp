#include "coisored/core/error.hpp"
#include "coisored/groupoid/groupoid.hpp"

namespace coisored {

namespace {

// Every generator of `ideal` must map into `into` (an ideal of phi's target ring).
void check_descent(CheckReport& report, const std::string& name, const AlgebraMorphism& phi,
                   const Ideal& ideal, const Ideal& into) {
  for (const auto& f : ideal.generators()) {
    Polynomial image = phi.apply(f);
    if (!into.contains(image)) {
      report.fail(name, Witness{f.to_string(), into.normal_form(image).to_string()});
      return;
    }
  }
  report.pass(name);
}

}  // namespace

CheckReport check_subgroupoid(const Subgroupoid& h) {
  CheckReport report("subgroupoid: " + h.label);
  const AffineGroupoid& g = h.parent;
  if (!same_ring(h.total_ideal.ring(), g.total.ring()) ||
      !same_ring(h.base_ideal.ring(), g.base.ring())) {
    throw InputError("subgroupoid '" + h.label + "': ideals over the wrong variables");
  }
  const Ideal total = g.total.relations() + h.total_ideal;
  const Ideal base = g.base.relations() + h.base_ideal;
  check_descent(report, "source descends", g.src, h.base_ideal, total);
  check_descent(report, "target descends", g.tgt, h.base_ideal, total);
  check_descent(report, "unit descends", g.unit, h.total_ideal, base);
  check_descent(report, "inverse descends", g.inv, h.total_ideal, total);
  std::vector<Polynomial> pair_gens;
  for (const auto& f : h.total_ideal.generators()) {
    pair_gens.push_back(g.composable.left(f));
    pair_gens.push_back(g.composable.right(f));
  }
  check_descent(report, "multiplication descends", g.mult, h.total_ideal,
                g.composable.result.relations().plus(pair_gens));
  if (h.stabilizer_assertion && g.symplectic) {
    if (auto w = coisotropy_failure(g.base_poisson(), h.base_ideal)) {
      report.fail("base ideal coisotropic", *w);
    } else {
      report.pass("base ideal coisotropic");
    }
    if (auto w = coisotropy_failure(g.total_poisson(), h.total_ideal)) {
      report.fail("total ideal coisotropic", *w);
    } else {
      report.pass("total ideal coisotropic");
    }
    report.pass("stabilizer status", "asserted by the user; the Lagrangian condition is not verified");
  }
  return report;
}

AffineGroupoid as_groupoid(const Subgroupoid& h) {
  const AffineGroupoid& g = h.parent;
  PresentedAlgebra base = quotient(g.base, h.base_ideal, g.base.label() + "|S").first;
  PresentedAlgebra total = quotient(g.total, h.total_ideal, h.label).first;
  return make_groupoid(h.label, base, total, g.src.images(), g.tgt.images(), g.unit.images(),
                       g.inv.images(), g.mult.images());
}

Subgroupoid isotropy_subgroupoid(const AffineGroupoid& g, const std::vector<Polynomial>& base_ideal,
                                 bool stabilizer) {
  std::vector<Polynomial> base_gens, total_gens;
  for (const auto& f : base_ideal) {
    Polynomial fb = rebase(f, g.base.ring());
    base_gens.push_back(fb);
    total_gens.push_back(g.src.apply(fb));
    total_gens.push_back(g.tgt.apply(fb));
  }
  return Subgroupoid{g.label + "|S", g, Ideal(g.total.ring(), total_gens),
                     Ideal(g.base.ring(), base_gens), stabilizer, "isotropy"};
}

Subgroupoid unit_subgroupoid(const AffineGroupoid& g, const std::vector<Polynomial>& base_ideal) {
  std::vector<Polynomial> base_gens, total_gens;
  AlgebraMorphism at_units = compose(g.unit, g.tgt);
  for (std::size_t i = 0; i < g.total.size(); ++i) {
    total_gens.push_back(g.total.var(i) - at_units.image(i));
  }
  for (const auto& f : base_ideal) {
    Polynomial fb = rebase(f, g.base.ring());
    base_gens.push_back(fb);
    total_gens.push_back(g.tgt.apply(fb));
  }
  return Subgroupoid{"1(S)", g, Ideal(g.total.ring(), total_gens), Ideal(g.base.ring(), base_gens),
                     false, "unit"};
}

Subgroupoid full_subgroupoid(const AffineGroupoid& g) {
  return Subgroupoid{g.label, g, Ideal(g.total.ring()), Ideal(g.base.ring()), false, "full"};
}

}  // namespace coisored
