#include "coisored/algebra/presented_algebra.hpp"

#include "coisored/arith/parse.hpp"

namespace coisored {

PresentedAlgebra::PresentedAlgebra(Ideal relations, std::string label)
    : relations_(std::move(relations)), label_(std::move(label)) {}

PresentedAlgebra::PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations,
                                   std::string label)
    : relations_(std::move(ring), std::move(relations)), label_(std::move(label)) {}

PresentedAlgebra PresentedAlgebra::free(std::vector<std::string> vars, std::string label) {
  return PresentedAlgebra(make_ring(std::move(vars)), {}, std::move(label));
}

PresentedAlgebra PresentedAlgebra::point(std::string label) {
  return PresentedAlgebra(make_ring({}), {}, std::move(label));
}

Polynomial PresentedAlgebra::parse(std::string_view text) const {
  return parse_polynomial(text, ring());
}

Polynomial PresentedAlgebra::normal_form(const Polynomial& f) const {
  return relations_.normal_form(f);
}

bool PresentedAlgebra::is_zero(const Polynomial& f) const { return relations_.contains(f); }

PresentedAlgebra PresentedAlgebra::with_label(std::string label) const {
  PresentedAlgebra a(*this);
  a.label_ = std::move(label);
  return a;
}

PresentedAlgebra PresentedAlgebra::with_membership_order(MonomialOrder order) const {
  return PresentedAlgebra(relations_.with_membership_order(std::move(order)), label_);
}

bool same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  const auto& ga = a.relations().generators();
  const auto& gb = b.relations().generators();
  if (ga == gb) return true;
  return same_ideal(a.relations(), b.relations());
}

}  // namespace coisored
