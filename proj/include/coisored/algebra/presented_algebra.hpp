#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coisored/arith/polynomial.hpp"
#include "coisored/groebner/ideal.hpp"

namespace coisored {

/// k[vars]/relations. Elements are polynomials over `ring()`; two elements are
/// equal when their difference lies in the relations (decided by normal form).
class PresentedAlgebra {
 public:
  PresentedAlgebra() = default;
  PresentedAlgebra(Ideal relations, std::string label);
  PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations, std::string label);

  static PresentedAlgebra free(std::vector<std::string> vars, std::string label);
  /// The scalar field k, an algebra with no generators.
  static PresentedAlgebra point(std::string label = "k");

  const RingPtr& ring() const { return relations_.ring(); }
  const Ideal& relations() const { return relations_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return ring()->size(); }
  const std::vector<std::string>& variables() const { return ring()->names(); }

  Polynomial var(std::size_t i) const { return Polynomial::variable(ring(), i); }
  Polynomial var(std::string_view name) const { return Polynomial::variable(ring(), name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ring(), c); }
  Polynomial zero() const { return Polynomial(ring()); }
  Polynomial parse(std::string_view text) const;

  Polynomial normal_form(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const;
  bool equal(const Polynomial& a, const Polynomial& b) const { return is_zero(a - b); }

  PresentedAlgebra with_label(std::string label) const;
  /// Same presentation, membership decided in `order`.
  PresentedAlgebra with_membership_order(MonomialOrder order) const;

 private:
  Ideal relations_;
  std::string label_;
};

/// Same variables (by name and order) and the same relation ideal.
bool same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b);

}  // namespace coisored
