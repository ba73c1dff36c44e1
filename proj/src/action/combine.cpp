#include "coisored/action/action.hpp"
#include "coisored/core/error.hpp"

namespace coisored {

namespace {

std::function<std::string(const std::string&)> with_prefix(const std::string& pre) {
  return [pre](const std::string& v) { return pre + v; };
}

}  // namespace

CheckReport check_commuting(const GroupoidAction& a, const GroupoidAction& b) {
  CheckReport report("commuting: " + a.label + ", " + b.label);
  if (!same_presentation(a.module, b.module)) {
    throw InputError("commuting check: '" + a.label + "' and '" + b.label + "' act on different modules");
  }
  auto invariant_moment = [&report](const std::string& name, const GroupoidAction& mover,
                                    const GroupoidAction& acting) {
    for (std::size_t c = 0; c < mover.moment.images().size(); ++c) {
      const Polynomial& f = mover.moment.image(c);
      if (!check_invariant(acting, f)) {
        Polynomial diff = acting.act.apply(rebase(f, acting.module.ring())) -
                          acting.domain.right(rebase(f, acting.module.ring()));
        report.fail(name, Witness{mover.groupoid.base.ring()->name(c),
                                  acting.domain.result.normal_form(diff).to_string()});
        return;
      }
    }
    report.pass(name);
  };
  invariant_moment("first moment invariant under second action", a, b);
  invariant_moment("second moment invariant under first action", b, a);
  try {
    const FiberedCoproduct& da = a.domain;
    const FiberedCoproduct& db = b.domain;
    // Triples (g, (i, m)): L_* for g, R_L_* for i, R_R_* for m.
    FiberedCoproduct t = fibered_coproduct(a.groupoid.total, db.result, a.groupoid.base,
                                           a.groupoid.src, compose(a.moment, db.right_inclusion),
                                           "triples");
    AlgebraMorphism a_then_b = mediate(da, t.left_inclusion, compose(b.act, t.right_inclusion));
    AlgebraMorphism a_inside =
        mediate(da, t.left_inclusion, compose(db.right_inclusion, t.right_inclusion));
    AlgebraMorphism b_then_a =
        mediate(db, compose(db.left_inclusion, t.right_inclusion), compose(a.act, a_inside));
    check_equal_on_generators(report, "actions commute", compose(a.act, a_then_b),
                              compose(b.act, b_then_a));
  } catch (const InputError& e) {
    report.fail("actions commute", Witness{"-", e.what()});
  }
  return report;
}

GroupoidAction product_action(const GroupoidAction& a, const GroupoidAction& b) {
  CheckReport r = check_commuting(a, b);
  if (!r.passed()) {
    const CheckItem* f = r.first_failure();
    throw VerificationError("actions '" + a.label + "' and '" + b.label + "' do not commute: " + f->name,
                            f->witness ? f->witness->generator + " -> " + f->witness->residue : "");
  }
  AffineGroupoid g = product_groupoid(a.groupoid, b.groupoid);
  std::vector<Polynomial> moment;
  for (const auto& im : a.moment.images()) moment.push_back(im);
  for (const auto& im : b.moment.images()) moment.push_back(im);
  AlgebraMorphism mu(g.base, a.module, moment);
  FiberedCoproduct d = action_domain(g, a.module, mu);
  const RingPtr& ring = d.result.ring();
  std::map<std::string, Polynomial> after_b;
  for (std::size_t m = 0; m < a.module.size(); ++m) {
    auto into_d = [](const std::string& v) {
      return v.rfind(kLeftPrefix, 0) == 0 ? "L_R_" + v.substr(2) : v;
    };
    after_b.emplace("R_" + a.module.ring()->name(m), rename(b.act.image(m), ring, into_d));
  }
  for (const auto& v : a.groupoid.total.variables()) {
    after_b.emplace("L_" + v, Polynomial::variable(ring, "L_L_" + v));
  }
  std::vector<Polynomial> act;
  for (const auto& im : a.act.images()) act.push_back(substitute(im, after_b, ring));
  return GroupoidAction{a.label + " x " + b.label, g, a.module, mu, d,
                        AlgebraMorphism(a.module, d.result, act)};
}

GroupoidAction factor_action(const GroupoidAction& a, int which) {
  if (!a.groupoid.factors) {
    throw InputError("action '" + a.label + "' is not an action of a product groupoid");
  }
  const AffineGroupoid& keep = which == 0 ? a.groupoid.factors->left : a.groupoid.factors->right;
  const AffineGroupoid& other = which == 0 ? a.groupoid.factors->right : a.groupoid.factors->left;
  const std::string kp = which == 0 ? kLeftPrefix : kRightPrefix;
  const std::string op = which == 0 ? kRightPrefix : kLeftPrefix;
  const RingPtr& mring = a.module.ring();
  std::vector<Polynomial> moment;
  for (const auto& x : keep.base.variables()) {
    moment.push_back(rebase(a.moment.image(kp + x), mring));
  }
  AlgebraMorphism mu(keep.base, a.module, moment);
  FiberedCoproduct d = action_domain(keep, a.module, mu);
  // The other factor acts through the identity arrow at the other moment.
  std::map<std::string, Polynomial> other_moment;
  for (const auto& y : other.base.variables()) {
    other_moment.emplace(y, d.right(rebase(a.moment.image(op + y), mring)));
  }
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 0; i < other.total.size(); ++i) {
    images.emplace("L_" + op + other.total.ring()->name(i),
                   substitute(other.unit.image(i), other_moment, d.result.ring()));
  }
  for (const auto& v : keep.total.variables()) {
    images.emplace("L_" + kp + v, d.result.var("L_" + v));
  }
  for (const auto& v : a.module.variables()) images.emplace("R_" + v, d.result.var("R_" + v));
  std::vector<Polynomial> act;
  for (const auto& im : a.act.images()) act.push_back(substitute(im, images, d.result.ring()));
  return GroupoidAction{a.label + "[" + keep.label + "]", keep, a.module, mu, d,
                        AlgebraMorphism(a.module, d.result, act)};
}

GroupoidAction extend_action(const GroupoidAction& a, const PresentedAlgebra& other, bool on_left) {
  const std::string p = on_left ? kLeftPrefix : kRightPrefix;
  const std::string q = on_left ? kRightPrefix : kLeftPrefix;
  TensorProduct tp = on_left ? tensor_product({a.module, other}, {kLeftPrefix, kRightPrefix})
                             : tensor_product({other, a.module}, {kLeftPrefix, kRightPrefix});
  const PresentedAlgebra& module = tp.result;
  std::vector<Polynomial> moment;
  for (const auto& im : a.moment.images()) moment.push_back(rename(im, module.ring(), with_prefix(p)));
  AlgebraMorphism mu(a.groupoid.base, module, moment);
  FiberedCoproduct d = action_domain(a.groupoid, module, mu);
  auto shift = [&p](const std::string& v) {
    return v.rfind(kLeftPrefix, 0) == 0 ? v : "R_" + p + v.substr(2);
  };
  std::vector<Polynomial> act;
  for (const auto& v : module.variables()) {
    if (v.rfind(p, 0) == 0) {
      act.push_back(rename(a.act.image(v.substr(2)), d.result.ring(), shift));
    } else {
      act.push_back(d.result.var("R_" + v));
    }
  }
  return GroupoidAction{a.label + " on " + module.label(), a.groupoid, module, mu, d,
                        AlgebraMorphism(module, d.result, act)};
}

GroupoidAction base_action(const AffineGroupoid& g) {
  AlgebraMorphism mu = AlgebraMorphism::identity(g.base);
  FiberedCoproduct d = action_domain(g, g.base, mu);
  std::vector<Polynomial> act;
  for (const auto& im : g.tgt.images()) act.push_back(rename(im, d.result.ring(), with_prefix("L_")));
  return GroupoidAction{g.label + " on " + g.base.label(), g, g.base, mu, d,
                        AlgebraMorphism(g.base, d.result, act)};
}

GroupoidAction left_mult_action(const AffineGroupoid& g) {
  FiberedCoproduct d = action_domain(g, g.total, g.tgt);
  std::vector<Polynomial> act;
  for (const auto& im : g.mult.images()) act.push_back(rebase(im, d.result.ring()));
  return GroupoidAction{g.label + " left", g, g.total, g.tgt, d, AlgebraMorphism(g.total, d.result, act)};
}

GroupoidAction right_mult_action(const AffineGroupoid& g) {
  FiberedCoproduct d = action_domain(g, g.total, g.src);
  // m*(f) on pairs (h, g^-1): first factor -> R_*, second -> inverse on L_*.
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 0; i < g.total.size(); ++i) {
    const std::string& v = g.total.ring()->name(i);
    images.emplace("L_" + v, d.result.var("R_" + v));
    images.emplace("R_" + v, rename(g.inv.image(i), d.result.ring(), with_prefix("L_")));
  }
  std::vector<Polynomial> act;
  for (const auto& im : g.mult.images()) act.push_back(substitute(im, images, d.result.ring()));
  return GroupoidAction{g.label + " right", g, g.total, g.src, d, AlgebraMorphism(g.total, d.result, act)};
}

}  // namespace coisored
