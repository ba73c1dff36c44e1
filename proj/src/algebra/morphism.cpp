#include "coisored/algebra/morphism.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

AlgebraMorphism::AlgebraMorphism(PresentedAlgebra source, PresentedAlgebra target,
                                 std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_.size()) {
    throw InputError("morphism from '" + source_.label() + "' needs " +
                     std::to_string(source_.size()) + " images, got " +
                     std::to_string(images.size()));
  }
  images_.reserve(images.size());
  for (auto& im : images) images_.push_back(rebase(im, target_.ring()));
}

AlgebraMorphism AlgebraMorphism::from_map(PresentedAlgebra source, PresentedAlgebra target,
                                          const std::map<std::string, Polynomial>& images) {
  std::vector<Polynomial> vec;
  for (const auto& name : source.variables()) {
    auto it = images.find(name);
    if (it == images.end()) {
      throw InputError("missing image for variable '" + name + "' of '" + source.label() + "'");
    }
    vec.push_back(it->second);
  }
  for (const auto& [name, _] : images) {
    if (!source.ring()->index(name)) {
      throw InputError("'" + name + "' is not a variable of '" + source.label() + "'");
    }
  }
  return AlgebraMorphism(std::move(source), std::move(target), std::move(vec));
}

AlgebraMorphism AlgebraMorphism::identity(const PresentedAlgebra& a) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.size(); ++i) images.push_back(a.var(i));
  return AlgebraMorphism(a, a, std::move(images));
}

const Polynomial& AlgebraMorphism::image(std::string_view name) const {
  return images_[source_.ring()->require(name)];
}

Polynomial AlgebraMorphism::apply(const Polynomial& f) const {
  return substitute(rebase(f, source_.ring()), images_, target_.ring());
}

Polynomial AlgebraMorphism::apply_nf(const Polynomial& f) const {
  return target_.normal_form(apply(f));
}

AlgebraMorphism AlgebraMorphism::with_target(PresentedAlgebra target) const {
  return AlgebraMorphism(source_, std::move(target), images_);
}

AlgebraMorphism AlgebraMorphism::with_source(PresentedAlgebra source) const {
  if (!same_ring(source.ring(), source_.ring())) {
    throw InputError("replacement source has different variables");
  }
  return AlgebraMorphism(std::move(source), target_, images_);
}

std::optional<Witness> morphism_failure(const AlgebraMorphism& phi) {
  for (const auto& r : phi.source().relations().generators()) {
    Polynomial image = phi.apply(r);
    if (!phi.target().is_zero(image)) {
      return Witness{r.to_string(), phi.target().normal_form(image).to_string()};
    }
  }
  return std::nullopt;
}

bool check_morphism(const AlgebraMorphism& phi) { return !morphism_failure(phi).has_value(); }

AlgebraMorphism compose(const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
  if (!same_presentation(phi.target(), psi.source())) {
    throw InputError("cannot compose: target of the first morphism ('" + phi.target().label() +
                     "') is not the source of the second ('" + psi.source().label() + "')");
  }
  std::vector<Polynomial> images;
  images.reserve(phi.images().size());
  for (const auto& im : phi.images()) images.push_back(psi.apply(im));
  return AlgebraMorphism(phi.source(), psi.target(), std::move(images));
}

void check_equal_on_generators(CheckReport& report, const std::string& name,
                               const AlgebraMorphism& lhs, const AlgebraMorphism& rhs) {
  const auto& target = lhs.target();
  for (std::size_t i = 0; i < lhs.source().size(); ++i) {
    Polynomial diff = lhs.image(i) - rebase(rhs.image(i), target.ring());
    if (!target.is_zero(diff)) {
      report.fail(name, Witness{lhs.source().ring()->name(i), target.normal_form(diff).to_string()});
      return;
    }
  }
  report.pass(name);
}

}  // namespace coisored
