#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coisored/algebra/morphism.hpp"

namespace coisored {

/// Tensor product over k of several algebras. Factor i's variables are renamed
/// with prefixes[i]; relations are the union of the renamed factor relations.
struct TensorProduct {
  PresentedAlgebra result;
  std::vector<AlgebraMorphism> inclusions;
  std::vector<std::string> prefixes;
};

TensorProduct tensor_product(const std::vector<PresentedAlgebra>& factors,
                             const std::vector<std::string>& prefixes, std::string label = {});

/// A (x)_base B: variables of A renamed L_*, of B renamed R_*, relations of both
/// plus leg_a(c) - leg_b(c) for every base generator c.
struct FiberedCoproduct {
  PresentedAlgebra result;
  AlgebraMorphism left_inclusion;
  AlgebraMorphism right_inclusion;
  PresentedAlgebra base;
  AlgebraMorphism left_leg;
  AlgebraMorphism right_leg;

  const PresentedAlgebra& left_factor() const { return left_inclusion.source(); }
  const PresentedAlgebra& right_factor() const { return right_inclusion.source(); }
  Polynomial left(const Polynomial& f) const { return left_inclusion.apply(f); }
  Polynomial right(const Polynomial& f) const { return right_inclusion.apply(f); }
};

inline constexpr const char* kLeftPrefix = "L_";
inline constexpr const char* kRightPrefix = "R_";

/// Throws InputError when a leg is not well defined.
FiberedCoproduct fibered_coproduct(const PresentedAlgebra& a, const PresentedAlgebra& b,
                                   const PresentedAlgebra& base, const AlgebraMorphism& leg_a,
                                   const AlgebraMorphism& leg_b, std::string label = {});

/// Coproduct over the scalars.
FiberedCoproduct product_algebra(const PresentedAlgebra& a, const PresentedAlgebra& b,
                                 std::string label = {});

/// k[vars]/(relations + J) with the projection x -> x.
std::pair<PresentedAlgebra, AlgebraMorphism> quotient(const PresentedAlgebra& a, const Ideal& j,
                                                      std::string label = {});

/// The morphism fc.result -> C restricting to f on the left factor and g on the
/// right one. Requires f and g to agree on the base (checked; InputError otherwise).
AlgebraMorphism mediate(const FiberedCoproduct& fc, const AlgebraMorphism& f,
                        const AlgebraMorphism& g);

/// phi (x) psi between fibered coproducts: left factor through phi, right through psi.
AlgebraMorphism tensor_morphism(const FiberedCoproduct& from, const FiberedCoproduct& to,
                                const AlgebraMorphism& phi, const AlgebraMorphism& psi);

}  // namespace coisored
