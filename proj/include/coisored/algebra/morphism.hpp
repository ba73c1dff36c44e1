#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coisored/algebra/check_report.hpp"
#include "coisored/algebra/presented_algebra.hpp"

namespace coisored {

/// Algebra map source -> target fixed by the images of the source generators.
/// Comorphisms of scheme maps (s*, t*, mu*, A*, ...) are stored this way.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  AlgebraMorphism(PresentedAlgebra source, PresentedAlgebra target, std::vector<Polynomial> images);

  static AlgebraMorphism from_map(PresentedAlgebra source, PresentedAlgebra target,
                                  const std::map<std::string, Polynomial>& images);
  static AlgebraMorphism identity(const PresentedAlgebra& a);

  const PresentedAlgebra& source() const { return source_; }
  const PresentedAlgebra& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_[i]; }
  const Polynomial& image(std::string_view name) const;

  /// Substitution of the images into f (f over the source ring); not normalised.
  Polynomial apply(const Polynomial& f) const;
  /// apply followed by the target normal form.
  Polynomial apply_nf(const Polynomial& f) const;

  /// Same images viewed with a different (name-compatible) source or target presentation.
  AlgebraMorphism with_target(PresentedAlgebra target) const;
  AlgebraMorphism with_source(PresentedAlgebra source) const;

 private:
  PresentedAlgebra source_;
  PresentedAlgebra target_;
  std::vector<Polynomial> images_;
};

/// Well-definedness: every source relation maps into the target relations.
bool check_morphism(const AlgebraMorphism& phi);
/// The first relation violating well-definedness, if any.
std::optional<Witness> morphism_failure(const AlgebraMorphism& phi);

/// x -> psi(phi(x)); requires phi.target and psi.source to be the same presentation.
AlgebraMorphism compose(const AlgebraMorphism& phi, const AlgebraMorphism& psi);

/// Checks lhs(x) == rhs(x) in the common target for every source generator x and
/// records one report item named `name`, with the first offending generator.
void check_equal_on_generators(CheckReport& report, const std::string& name,
                               const AlgebraMorphism& lhs, const AlgebraMorphism& rhs);

}  // namespace coisored
