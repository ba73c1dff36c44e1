#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coisored/action/action.hpp"

namespace coisored {

/// Invariants of an action on its module, up to a degree bound. `per_degree[e]`
/// holds the basis elements whose leading monomial has degree e; together the
/// entries for degrees <= e span every invariant of degree <= e.
struct InvariantBasis {
  GroupoidAction action;
  int degree_bound = 0;
  std::vector<std::vector<Polynomial>> per_degree;
  /// Pruned algebra generators, named a, b, c, ... (skipping module variable names).
  std::vector<Tag> generators;
};

InvariantBasis invariants_up_to_degree(const GroupoidAction& a, int d);

/// Name for the i-th generator that avoids `taken`.
std::string tag_name(std::size_t i, const std::vector<std::string>& taken);

/// k[y]/J with J the kernel of y_i -> generator_i on `fiber`, and that evaluation map.
std::pair<PresentedAlgebra, AlgebraMorphism> present_reduced(const PresentedAlgebra& fiber,
                                                             const std::vector<Tag>& generators);
std::pair<PresentedAlgebra, AlgebraMorphism> present_reduced(const InvariantBasis& inv);

struct ReductionResult {
  PresentedAlgebra reduced;
  PoissonStructure reduced_poisson;
  /// reduced -> fiber algebra k[mu^-1(S)], y_i -> generator_i.
  AlgebraMorphism projection;
  std::vector<Tag> generators;
  /// Representatives of the generators in the ambient k[M].
  std::vector<Polynomial> lifts;
  std::vector<std::string> closure_log;
  /// The action whose invariants were taken (on the fiber algebra).
  GroupoidAction fiber_action;
  PoissonStructure ambient_poisson;
  int degree_bound = 0;
};

inline constexpr int kDefaultClosureCap = 8;

/// Bracket on the reduced algebra from brackets of lifts. Projected brackets not in
/// the current subalgebra are appended as generators (closure loop, at most `cap`
/// rounds). Throws VerificationError when an appended element is not invariant or
/// the result fails Jacobi, BudgetExceeded when the cap is reached.
ReductionResult reduced_bracket(const InvariantBasis& inv, const PoissonStructure& pm,
                                int cap = kDefaultClosureCap);

/// Restrict to H over S, then take invariants.
ReductionResult reduce_restricted(const GroupoidAction& a, const Subgroupoid& h,
                                  const PoissonStructure& pm, int d, int cap = kDefaultClosureCap);
/// Invariants of the whole groupoid on mu^-1(S) (S given by base ideal generators).
ReductionResult reduce_quotient(const GroupoidAction& a, const std::vector<Polynomial>& base_ideal,
                                const PoissonStructure& pm, int d, int cap = kDefaultClosureCap);

/// (a) lift independence, (b) projected brackets invariant, (c) brackets of lifts
/// preserve the fiber ideal, (d) Jacobi; randomized parts use mt19937_64(seed).
CheckReport verify_reduction(const ReductionResult& r, int trials, std::uint64_t seed);

/// Text rendering used by the CLI and for route comparison.
std::string describe(const ReductionResult& r);

struct ResidualResult {
  ReductionResult reduction;
  GroupoidAction residual;
  CheckReport report;
};

/// G acting on the reduction of M by H in I. Verifies commuting, descent to the
/// fiber, expressibility of the descended action in k[G] (x) invariants, and the
/// action and Hamiltonian axioms of the result.
ResidualResult residual_action(const GroupoidAction& g_act, const GroupoidAction& i_act,
                               const Subgroupoid& h, const PoissonStructure& pm, int d,
                               int cap = kDefaultClosureCap);

/// The diagonal of G^- x G over the diagonal of X^- x X, flagged as a stabilizer.
/// Throws VerificationError if check_subgroupoid fails.
Subgroupoid diagonal_stabilizer(const AffineGroupoid& g);

/// Coisotropy of the diagonal ideal <x_L - x_R> in X^- x X.
CheckReport check_diagonal_coisotropic(const PoissonStructure& p);

struct CompositionResult {
  ResidualResult residual;
  /// Action of G x K^- on M (x) N (before reduction).
  GroupoidAction total_action;
};

/// M a G x I^- scheme, N an I x K^- scheme: the G x K^- scheme obtained by
/// reducing M (x) N by the diagonal of I^- x I.
CompositionResult compose_hamiltonian_schemes(const GroupoidAction& m, const PoissonStructure& pm,
                                              const GroupoidAction& n, const PoissonStructure& pn,
                                              int d, int cap = kDefaultClosureCap);

/// I acting on itself on both sides, as an I x I^- scheme.
GroupoidAction unit_bimodule(const AffineGroupoid& i);

/// For M a G x I^- scheme: composing with the unit bimodule of I gives back M.
/// Exhibits mutually inverse generator maps between k[M] and the composite.
CheckReport check_unit_composition(const CompositionResult& c, const GroupoidAction& m,
                                   const PoissonStructure& pm);

}  // namespace coisored
