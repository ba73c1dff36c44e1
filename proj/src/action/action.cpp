#include "coisored/action/action.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

namespace {

std::vector<Polynomial> rebase_all(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(rebase(p, ring));
  return out;
}

// The action `a` transported to a new groupoid and module presentation with the
// same variable names. Verifies descent and the axioms of the result.
GroupoidAction descend(const GroupoidAction& a, AffineGroupoid groupoid, PresentedAlgebra module,
                       std::string label) {
  AlgebraMorphism moment(groupoid.base, module, rebase_all(a.moment.images(), module.ring()));
  if (auto w = morphism_failure(moment)) {
    throw VerificationError("moment of '" + label + "' does not descend",
                            w->generator + " -> " + w->residue);
  }
  FiberedCoproduct domain = [&] {
    try {
      return action_domain(groupoid, module, moment);
    } catch (const InputError& e) {
      throw VerificationError("action domain of '" + label + "' is ill-defined", e.what());
    }
  }();
  AlgebraMorphism act(module, domain.result, rebase_all(a.act.images(), domain.result.ring()));
  if (auto w = morphism_failure(act)) {
    throw VerificationError("action of '" + label + "' does not descend",
                            w->generator + " -> " + w->residue);
  }
  GroupoidAction out{std::move(label), std::move(groupoid), std::move(module), moment, domain, act};
  CheckReport r = check_action(out);
  if (!r.passed()) {
    const CheckItem* f = r.first_failure();
    std::string witness = f->witness ? f->witness->generator + " -> " + f->witness->residue : "";
    throw VerificationError("descended action '" + out.label + "' fails " + f->name, witness);
  }
  return out;
}

}  // namespace

FiberedCoproduct action_domain(const AffineGroupoid& g, const PresentedAlgebra& module,
                               const AlgebraMorphism& moment) {
  return fibered_coproduct(g.total, module, g.base, g.src, moment,
                           g.total.label() + " x_s,mu " + module.label());
}

GroupoidAction make_action(std::string label, AffineGroupoid groupoid, PresentedAlgebra module,
                           std::vector<Polynomial> moment, std::vector<Polynomial> act) {
  if (moment.size() != groupoid.base.size()) {
    throw InputError("action '" + label + "': the moment needs one image per base variable");
  }
  if (act.size() != module.size()) {
    throw InputError("action '" + label + "': the action needs one image per module variable");
  }
  AlgebraMorphism mu(groupoid.base, module, rebase_all(moment, module.ring()));
  FiberedCoproduct domain = action_domain(groupoid, module, mu);
  AlgebraMorphism a(module, domain.result, rebase_all(act, domain.result.ring()));
  return GroupoidAction{std::move(label), std::move(groupoid), std::move(module), mu, domain, a};
}

CheckReport check_action(const GroupoidAction& a) {
  CheckReport report("action axioms: " + a.label);
  const AffineGroupoid& g = a.groupoid;
  const FiberedCoproduct& d = a.domain;
  if (auto w = morphism_failure(a.act)) {
    report.fail("action well-defined", *w);
  } else {
    report.pass("action well-defined");
  }
  check_equal_on_generators(report, "(i) moment equivariance", compose(a.moment, a.act),
                            compose(g.tgt, d.left_inclusion));
  try {
    AlgebraMorphism at_unit = mediate(d, compose(g.unit, a.moment), AlgebraMorphism::identity(a.module));
    check_equal_on_generators(report, "(ii) unit acts trivially", compose(a.act, at_unit),
                              AlgebraMorphism::identity(a.module));
  } catch (const InputError& e) {
    report.fail("(ii) unit acts trivially", Witness{"-", e.what()});
  }
  try {
    // Triples (g1, (g2, m)): L_* for g1, R_L_* for g2, R_R_* for m.
    AlgebraMorphism left_of_domain = compose(g.tgt, d.left_inclusion);
    FiberedCoproduct triples =
        fibered_coproduct(g.total, d.result, g.base, g.src, left_of_domain, "triples");
    AlgebraMorphism nested =
        mediate(d, triples.left_inclusion, compose(a.act, triples.right_inclusion));
    AlgebraMorphism iota12 = mediate(g.composable, triples.left_inclusion,
                                     compose(d.left_inclusion, triples.right_inclusion));
    AlgebraMorphism multiplied = mediate(d, compose(g.mult, iota12),
                                         compose(d.right_inclusion, triples.right_inclusion));
    check_equal_on_generators(report, "(iii) associativity", compose(a.act, nested),
                              compose(a.act, multiplied));
  } catch (const InputError& e) {
    report.fail("(iii) associativity", Witness{"-", e.what()});
  }
  return report;
}

bool check_invariant(const GroupoidAction& a, const Polynomial& f) {
  Polynomial fm = rebase(f, a.module.ring());
  return a.domain.result.is_zero(a.act.apply(fm) - a.domain.right(fm));
}

bool check_equivariant(const GroupoidAction& a, const GroupoidAction& b, const AlgebraMorphism& psi) {
  if (!same_ring(a.groupoid.total.ring(), b.groupoid.total.ring())) return false;
  for (std::size_t c = 0; c < a.groupoid.base.size(); ++c) {
    Polynomial lhs = psi.apply(rebase(b.moment.image(c), psi.source().ring()));
    if (!a.module.equal(rebase(lhs, a.module.ring()), a.moment.image(c))) return false;
  }
  const FiberedCoproduct& da = a.domain;
  for (std::size_t i = 0; i < b.module.size(); ++i) {
    Polynomial lhs = a.act.apply(rebase(psi.image(i), a.module.ring()));
    std::map<std::string, Polynomial> images;
    for (const auto& v : a.groupoid.total.variables()) {
      images.emplace("L_" + v, da.result.var("L_" + v));
    }
    for (std::size_t j = 0; j < b.module.size(); ++j) {
      images.emplace("R_" + b.module.ring()->name(j), da.right(rebase(psi.image(j), a.module.ring())));
    }
    Polynomial rhs = substitute(b.act.image(i), images, da.result.ring());
    if (!da.result.equal(lhs, rhs)) return false;
  }
  return true;
}

GroupoidAction restrict_action(const GroupoidAction& a, const Subgroupoid& h) {
  std::vector<Polynomial> fiber;
  for (const auto& f : h.base_ideal.generators()) {
    fiber.push_back(a.moment.apply(rebase(f, a.groupoid.base.ring())));
  }
  PresentedAlgebra module =
      quotient(a.module, Ideal(a.module.ring(), fiber), a.module.label() + "|fiber").first;
  return descend(a, as_groupoid(h), module, a.label + "|" + h.label);
}

GroupoidAction quotient_action(const GroupoidAction& a, const Ideal& j, std::string module_label) {
  if (module_label.empty()) module_label = a.module.label() + "/J";
  PresentedAlgebra module = quotient(a.module, j, std::move(module_label)).first;
  return descend(a, a.groupoid, module, a.label + "/J");
}

GraphIdeal graph_ideal(const GroupoidAction& a) {
  const AffineGroupoid& g = a.groupoid;
  TensorProduct amb = tensor_product({a.module, g.total, a.module}, {"N_", "G_", "M_"},
                                     "graph of " + a.label);
  const RingPtr& ring = amb.result.ring();
  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < g.base.size(); ++c) {
    gens.push_back(amb.inclusions[1].apply(g.src.image(c)) -
                   amb.inclusions[2].apply(a.moment.image(c)));
  }
  auto to_blocks = [](const std::string& name) {
    return (name.rfind(kLeftPrefix, 0) == 0 ? "G_" : "M_") + name.substr(2);
  };
  for (std::size_t h = 0; h < a.module.size(); ++h) {
    Polynomial lift = a.domain.result.normal_form(a.act.image(h));
    gens.push_back(amb.inclusions[0].apply(a.module.var(h)) - rename(lift, ring, to_blocks));
  }
  Ideal ideal = amb.result.relations().plus(gens).with_membership_order(MonomialOrder::block(
      a.module.size(), MonomialOrder::grevlex(), MonomialOrder::grevlex()));
  return GraphIdeal{std::move(amb), std::move(ideal)};
}

}  // namespace coisored
