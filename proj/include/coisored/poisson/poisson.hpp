#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coisored/algebra/check_report.hpp"
#include "coisored/algebra/coproduct.hpp"

namespace coisored {

/// Poisson bracket on a presented algebra, given by the antisymmetric matrix of
/// generator brackets {x_i, x_j}. The constructor rejects matrices that are not
/// antisymmetric or for which the relations do not form a Poisson ideal.
class PoissonStructure {
 public:
  PoissonStructure() = default;
  /// `matrix` is n*n, row-major.
  PoissonStructure(PresentedAlgebra algebra, std::vector<Polynomial> matrix);

  /// Brackets {a, b} = value for listed pairs; unlisted pairs are zero.
  static PoissonStructure from_brackets(
      PresentedAlgebra algebra,
      const std::vector<std::tuple<std::string, std::string, Polynomial>>& brackets);
  static PoissonStructure zero(PresentedAlgebra algebra);
  /// Skips validation. For structures valid by construction and for tests that
  /// need a deliberately broken bracket.
  static PoissonStructure unchecked(PresentedAlgebra algebra, std::vector<Polynomial> matrix);

  const PresentedAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return matrix_[i * size() + j]; }
  const std::vector<Polynomial>& matrix() const { return matrix_; }

  /// {f, g} = sum_{i != j} {x_i, x_j} df/dx_i dg/dx_j, in normal form.
  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;
  /// Same sum without normalisation; a valid lift of the bracket.
  Polynomial raw_bracket(const Polynomial& f, const Polynomial& g) const;

  /// The same matrix over another presentation of the same variables.
  PoissonStructure over(PresentedAlgebra algebra) const;

 private:
  PresentedAlgebra algebra_;
  std::vector<Polynomial> matrix_;
};

/// First pair (x_i, r) with {x_i, r} outside the relations, if any.
std::optional<Witness> poisson_ideal_failure(const PoissonStructure& p);

std::optional<Witness> jacobi_failure(const PoissonStructure& p);
bool check_jacobi(const PoissonStructure& p);

std::optional<Witness> coisotropy_failure(const PoissonStructure& p, const Ideal& i);
bool check_coisotropic(const PoissonStructure& p, const Ideal& i);

/// phi({x_i, x_j}_src) == sign * {phi(x_i), phi(x_j)}_tgt for all generator pairs.
std::optional<Witness> poisson_morphism_failure(const PoissonStructure& src,
                                                const PoissonStructure& tgt,
                                                const AlgebraMorphism& phi, int sign);
bool check_poisson_morphism(const PoissonStructure& src, const PoissonStructure& tgt,
                            const AlgebraMorphism& phi, int sign);

PoissonStructure negate(const PoissonStructure& p);

/// Block-diagonal structure on the tensor product (mixed brackets zero).
PoissonStructure product_structure(const std::vector<PoissonStructure>& factors,
                                   const TensorProduct& product);
PoissonStructure product_structure(const PoissonStructure& a, const PoissonStructure& b);

/// Determinant of the bracket matrix restricted to the given variables.
Polynomial bracket_determinant(const PoissonStructure& p, const std::vector<std::string>& vars);

/// True when det is a unit modulo the relations: 1 in relations + <det>.
bool is_unit_modulo(const PresentedAlgebra& a, const Polynomial& det);

}  // namespace coisored
