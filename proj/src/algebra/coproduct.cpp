#include "coisored/algebra/coproduct.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

TensorProduct tensor_product(const std::vector<PresentedAlgebra>& factors,
                             const std::vector<std::string>& prefixes, std::string label) {
  if (factors.size() != prefixes.size()) throw InputError("one prefix per tensor factor required");
  std::vector<std::string> names;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (const auto& v : factors[f].variables()) names.push_back(prefixes[f] + v);
  }
  RingPtr ring = make_ring(std::move(names));
  std::vector<Polynomial> relations;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::string& pre = prefixes[f];
    auto mv = [&pre](const std::string& s) { return pre + s; };
    for (const auto& r : factors[f].relations().generators()) {
      relations.push_back(rename(r, ring, mv));
    }
  }
  if (label.empty()) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) label += " x ";
      label += factors[f].label();
    }
  }
  TensorProduct out{PresentedAlgebra(ring, std::move(relations), std::move(label)), {}, prefixes};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::vector<Polynomial> images;
    for (const auto& v : factors[f].variables()) {
      images.push_back(Polynomial::variable(ring, prefixes[f] + v));
    }
    out.inclusions.emplace_back(factors[f], out.result, std::move(images));
  }
  return out;
}

FiberedCoproduct fibered_coproduct(const PresentedAlgebra& a, const PresentedAlgebra& b,
                                   const PresentedAlgebra& base, const AlgebraMorphism& leg_a,
                                   const AlgebraMorphism& leg_b, std::string label) {
  if (!same_ring(leg_a.source().ring(), base.ring()) ||
      !same_ring(leg_b.source().ring(), base.ring())) {
    throw InputError("fibered coproduct legs must start at the base '" + base.label() + "'");
  }
  if (!same_ring(leg_a.target().ring(), a.ring()) || !same_ring(leg_b.target().ring(), b.ring())) {
    throw InputError("fibered coproduct legs must end at the factors");
  }
  if (auto w = morphism_failure(leg_a.with_source(base).with_target(a))) {
    throw InputError("ill-defined leg into '" + a.label() + "': relation " + w->generator +
                     " maps to " + w->residue);
  }
  if (auto w = morphism_failure(leg_b.with_source(base).with_target(b))) {
    throw InputError("ill-defined leg into '" + b.label() + "': relation " + w->generator +
                     " maps to " + w->residue);
  }
  if (label.empty()) label = a.label() + " x_" + base.label() + " " + b.label();
  TensorProduct tp = tensor_product({a, b}, {kLeftPrefix, kRightPrefix});
  std::vector<Polynomial> relations = tp.result.relations().generators();
  for (std::size_t c = 0; c < base.size(); ++c) {
    Polynomial l = tp.inclusions[0].apply(leg_a.image(c));
    Polynomial r = tp.inclusions[1].apply(leg_b.image(c));
    relations.push_back(l - r);
  }
  PresentedAlgebra result(tp.result.ring(), std::move(relations), std::move(label));
  return FiberedCoproduct{result,
                          tp.inclusions[0].with_target(result),
                          tp.inclusions[1].with_target(result),
                          base,
                          leg_a.with_source(base).with_target(a),
                          leg_b.with_source(base).with_target(b)};
}

FiberedCoproduct product_algebra(const PresentedAlgebra& a, const PresentedAlgebra& b,
                                 std::string label) {
  PresentedAlgebra k = PresentedAlgebra::point();
  AlgebraMorphism la(k, a, {});
  AlgebraMorphism lb(k, b, {});
  if (label.empty()) label = a.label() + " x " + b.label();
  return fibered_coproduct(a, b, k, la, lb, std::move(label));
}

std::pair<PresentedAlgebra, AlgebraMorphism> quotient(const PresentedAlgebra& a, const Ideal& j,
                                                      std::string label) {
  if (!same_ring(a.ring(), j.ring())) throw InputError("quotient ideal over the wrong variables");
  if (label.empty()) label = a.label() + "/J";
  PresentedAlgebra q(a.relations().plus(j.generators()), std::move(label));
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.size(); ++i) images.push_back(q.var(i));
  return {q, AlgebraMorphism(a, q, std::move(images))};
}

AlgebraMorphism mediate(const FiberedCoproduct& fc, const AlgebraMorphism& f,
                        const AlgebraMorphism& g) {
  if (!same_ring(f.source().ring(), fc.left_factor().ring()) ||
      !same_ring(g.source().ring(), fc.right_factor().ring())) {
    throw InputError("mediating morphism: sources do not match the coproduct factors");
  }
  if (!same_ring(f.target().ring(), g.target().ring())) {
    throw InputError("mediating morphism: targets differ");
  }
  const PresentedAlgebra& target = f.target();
  for (std::size_t c = 0; c < fc.base.size(); ++c) {
    Polynomial diff = f.apply(fc.left_leg.image(c)) - g.apply(fc.right_leg.image(c));
    if (!target.is_zero(diff)) {
      throw InputError("mediating morphism: maps disagree on base generator '" +
                       fc.base.ring()->name(c) + "' (" + target.normal_form(diff).to_string() + ")");
    }
  }
  std::vector<Polynomial> images = f.images();
  for (const auto& im : g.images()) images.push_back(rebase(im, target.ring()));
  return AlgebraMorphism(fc.result, target, std::move(images));
}

AlgebraMorphism tensor_morphism(const FiberedCoproduct& from, const FiberedCoproduct& to,
                                const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
  AlgebraMorphism left = compose(phi, to.left_inclusion);
  AlgebraMorphism right = compose(psi, to.right_inclusion);
  return mediate(from, left.with_target(to.result), right.with_target(to.result));
}

}  // namespace coisored
