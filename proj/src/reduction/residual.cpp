#include "coisored/core/error.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored {

namespace {

[[noreturn]] void fail_with(const CheckReport& r, const std::string& what) {
  const CheckItem* f = r.first_failure();
  throw VerificationError(what + ": " + f->name,
                          f->witness ? f->witness->generator + " -> " + f->witness->residue : "");
}

}  // namespace

ResidualResult residual_action(const GroupoidAction& g_act, const GroupoidAction& i_act,
                               const Subgroupoid& h, const PoissonStructure& pm, int d, int cap) {
  CheckReport report("residual action: " + g_act.label);
  CheckReport commuting = check_commuting(g_act, i_act);
  report.append(commuting, "commuting: ");
  if (!commuting.passed()) fail_with(commuting, "residual action needs commuting actions");

  GroupoidAction i_fiber = restrict_action(i_act, h);
  report.pass("(i) restricted action on the fiber");
  GroupoidAction g_fiber = quotient_action(g_act, i_fiber.module.relations());
  report.pass("(i) action descends to the fiber");

  ReductionResult red = reduced_bracket(invariants_up_to_degree(i_fiber, d), pm, cap);
  const PresentedAlgebra& fiber = g_fiber.module;
  const FiberedCoproduct& dom = g_fiber.domain;
  const AffineGroupoid& g = g_act.groupoid;

  // Temporary tags: _g<i> for arrow coordinates, _y<i> for invariant generators.
  std::vector<Tag> tags;
  std::map<std::string, std::string> back;
  for (std::size_t i = 0; i < g.total.size(); ++i) {
    const std::string name = "_g" + std::to_string(i);
    tags.push_back(Tag{name, dom.result.var("L_" + g.total.ring()->name(i))});
    back.emplace(name, "L_" + g.total.ring()->name(i));
  }
  for (std::size_t i = 0; i < red.generators.size(); ++i) {
    const std::string name = "_y" + std::to_string(i);
    tags.push_back(Tag{name, dom.right(rebase(red.generators[i].generator, fiber.ring()))});
    back.emplace(name, "R_" + red.generators[i].name);
  }
  std::vector<Polynomial> act_images;
  for (const auto& t : red.generators) {
    Polynomial image = g_fiber.act.apply(rebase(t.generator, fiber.ring()));
    auto expr = subalgebra_express(image, tags, dom.result.relations());
    if (!expr) {
      report.fail("(ii) descended action expressible in invariants",
                  Witness{t.name, dom.result.normal_form(image).to_string()});
      fail_with(report, "residual action");
    }
    act_images.push_back(*expr);
  }
  report.pass("(ii) descended action expressible in invariants");

  std::vector<Polynomial> moment_images;
  for (std::size_t c = 0; c < g.base.size(); ++c) {
    Polynomial image = fiber.normal_form(g_fiber.moment.image(c));
    auto expr = subalgebra_express(image, red.generators, fiber.relations());
    if (!expr) {
      report.fail("(ii) moment expressible in invariants",
                  Witness{g.base.ring()->name(c), image.to_string()});
      fail_with(report, "residual action");
    }
    moment_images.push_back(*expr);
  }
  report.pass("(ii) moment expressible in invariants");

  GroupoidAction residual = [&] {
    try {
      AlgebraMorphism mu(g.base, red.reduced, [&] {
        std::vector<Polynomial> out;
        for (const auto& m : moment_images) out.push_back(rebase(m, red.reduced.ring()));
        return out;
      }());
      FiberedCoproduct d_red = action_domain(g, red.reduced, mu);
      std::vector<Polynomial> act;
      for (const auto& e : act_images) {
        act.push_back(rename(e, d_red.result.ring(), [&back](const std::string& s) { return back.at(s); }));
      }
      return make_action(g_act.label + " on reduction", g, red.reduced, mu.images(), act);
    } catch (const InputError& e) {
      throw VerificationError("residual moment is not well defined on the reduction", e.what());
    }
  }();
  report.append(check_action(residual), "(iii) ");
  report.append(check_hamiltonian(residual, red.reduced_poisson), "(iv) ");
  return ResidualResult{std::move(red), std::move(residual), std::move(report)};
}

Subgroupoid diagonal_stabilizer(const AffineGroupoid& g) {
  AffineGroupoid parent = product_groupoid(negate(g), g);
  std::vector<Polynomial> total_gens, base_gens;
  for (const auto& v : g.total.variables()) {
    total_gens.push_back(parent.total.var("L_" + v) - parent.total.var("R_" + v));
  }
  for (const auto& v : g.base.variables()) {
    base_gens.push_back(parent.base.var("L_" + v) - parent.base.var("R_" + v));
  }
  Subgroupoid h{"diag(" + g.label + ")", parent, Ideal(parent.total.ring(), total_gens),
                Ideal(parent.base.ring(), base_gens), true, "diagonal of G^- x G"};
  CheckReport r = check_subgroupoid(h);
  if (!r.passed()) fail_with(r, "diagonal of '" + g.label + "' is not a stabilizer candidate");
  return h;
}

CheckReport check_diagonal_coisotropic(const PoissonStructure& p) {
  const PresentedAlgebra& x = p.algebra();
  CheckReport report("diagonal coisotropic: " + x.label());
  TensorProduct tp = tensor_product({x, x}, {kLeftPrefix, kRightPrefix});
  PoissonStructure on_square = product_structure({negate(p), p}, tp);
  std::vector<Polynomial> gens;
  for (const auto& v : x.variables()) gens.push_back(tp.result.var("L_" + v) - tp.result.var("R_" + v));
  if (auto w = coisotropy_failure(on_square, Ideal(tp.result.ring(), gens))) {
    report.fail("diagonal coisotropic", *w);
  } else {
    report.pass("diagonal coisotropic");
  }
  return report;
}

}  // namespace coisored
