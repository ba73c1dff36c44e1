#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coisored/algebra/check_report.hpp"
#include "coisored/algebra/coproduct.hpp"
#include "coisored/poisson/poisson.hpp"

namespace coisored {

/// Poisson data making a groupoid symplectic. `chart` lists the total-space
/// variables whose bracket determinant certifies nondegeneracy; variables that
/// only encode inverses (u with t*u = 1) are left out of it.
struct SymplecticData {
  PoissonStructure total;
  PoissonStructure base;
  std::vector<std::string> chart;
};

struct ProductFactors;

/// Groupoid G over X given by structure comorphisms. `composable` is
/// k[G] (x)_{s,t} k[G]: a pair (g1, g2) with s(g1) = t(g2), whose variables are
/// L_* for g1 and R_* for g2; mult sends k[G] into it.
struct AffineGroupoid {
  std::string label;
  PresentedAlgebra base;
  PresentedAlgebra total;
  AlgebraMorphism src;
  AlgebraMorphism tgt;
  AlgebraMorphism unit;
  AlgebraMorphism inv;
  FiberedCoproduct composable;
  AlgebraMorphism mult;
  std::optional<SymplecticData> symplectic;
  /// Set for groupoids built by product_groupoid.
  std::shared_ptr<const ProductFactors> factors;

  bool is_symplectic() const { return symplectic.has_value(); }
  const PoissonStructure& total_poisson() const;
  const PoissonStructure& base_poisson() const;
};

struct ProductFactors {
  AffineGroupoid left;
  AffineGroupoid right;
};

/// Images are polynomials whose variable names live in the right rings: src/tgt/inv
/// over total variables, unit over base variables, mult over L_*/R_* copies of the
/// total variables.
AffineGroupoid make_groupoid(std::string label, PresentedAlgebra base, PresentedAlgebra total,
                             std::vector<Polynomial> src, std::vector<Polynomial> tgt,
                             std::vector<Polynomial> unit, std::vector<Polynomial> inv,
                             std::vector<Polynomial> mult);

/// k[G] (x)_{s,t} k[G] for the given structure maps.
FiberedCoproduct composable_pairs(const PresentedAlgebra& base, const PresentedAlgebra& total,
                                  const AlgebraMorphism& src, const AlgebraMorphism& tgt);

/// Attaches Poisson structures; an empty chart means all total variables.
AffineGroupoid with_symplectic(AffineGroupoid g, PoissonStructure total, PoissonStructure base,
                               std::vector<std::string> chart = {});

/// Comorphism identities of a groupoid object, each item naming the first failing generator.
CheckReport check_groupoid_axioms(const AffineGroupoid& g);

/// Multiplication graph coisotropic in G x G x G^-, target Poisson, source
/// anti-Poisson, and unit determinant of the bracket matrix on the chart.
CheckReport check_symplectic(const AffineGroupoid& g);

/// Ideal of the multiplication graph {(g1 g2, g1, g2)} inside k[G]^(x)3 with blocks
/// P_ (product), A_, B_ (factors). Used by check_symplectic and by tests.
struct MultiplicationGraph {
  TensorProduct ambient;
  Ideal ideal;
};
MultiplicationGraph multiplication_graph(const AffineGroupoid& g);

// Built-in constructors.
AffineGroupoid pair_groupoid(const PresentedAlgebra& x, const PoissonStructure& p);
AffineGroupoid cotangent_groupoid_torus(int n);
AffineGroupoid trivial_groupoid();
AffineGroupoid negate(const AffineGroupoid& g);
AffineGroupoid product_groupoid(const AffineGroupoid& g, const AffineGroupoid& h);

/// H over S inside G over X, given by ideals of k[G] and k[X].
struct Subgroupoid {
  std::string label;
  AffineGroupoid parent;
  Ideal total_ideal;
  Ideal base_ideal;
  bool stabilizer_assertion = false;
  std::string provenance;
};

/// Descent of the five structure maps; for symplectic parents with the stabilizer
/// assertion set, also coisotropy of both ideals (the Lagrangian condition is not checked).
CheckReport check_subgroupoid(const Subgroupoid& h);

/// H as a groupoid in its own right: quotient presentations, same structure images.
AffineGroupoid as_groupoid(const Subgroupoid& h);

/// Restriction of G to S: arrows with source and target in S.
Subgroupoid isotropy_subgroupoid(const AffineGroupoid& g, const std::vector<Polynomial>& base_ideal,
                                 bool stabilizer = false);
/// Identity arrows over S only.
Subgroupoid unit_subgroupoid(const AffineGroupoid& g, const std::vector<Polynomial>& base_ideal);
/// H = G over S = X.
Subgroupoid full_subgroupoid(const AffineGroupoid& g);

}  // namespace coisored
