#pragma once

#include <string>
#include <vector>

#include "coisored/groupoid/groupoid.hpp"

namespace coisored {

/// Action of G over X on M with moment mu: M -> X. `domain` is
/// k[G] (x)_{s,mu} k[X] k[M], with L_* for arrows and R_* for points of M;
/// `act` (A*) sends k[M] into it.
struct GroupoidAction {
  std::string label;
  AffineGroupoid groupoid;
  PresentedAlgebra module;
  AlgebraMorphism moment;
  FiberedCoproduct domain;
  AlgebraMorphism act;
};

/// Images are rebased by name: moment images over module variables, act images
/// over L_<arrow> / R_<module> variables.
GroupoidAction make_action(std::string label, AffineGroupoid groupoid, PresentedAlgebra module,
                           std::vector<Polynomial> moment, std::vector<Polynomial> act);

FiberedCoproduct action_domain(const AffineGroupoid& g, const PresentedAlgebra& module,
                               const AlgebraMorphism& moment);

/// Axioms (i) moment equivariance, (ii) unit acts trivially, (iii) associativity.
CheckReport check_action(const GroupoidAction& a);

/// A*f = 1 (x) f modulo the domain relations.
bool check_invariant(const GroupoidAction& a, const Polynomial& f);

/// psi: k[N] -> k[M] intertwines b (on N) with a (on M) and the moments.
bool check_equivariant(const GroupoidAction& a, const GroupoidAction& b, const AlgebraMorphism& psi);

/// Restriction to H over S acting on mu^{-1}(S). Descent of A* and the action
/// axioms of the result are verified; VerificationError otherwise.
GroupoidAction restrict_action(const GroupoidAction& a, const Subgroupoid& h);

/// The same groupoid acting on k[M]/J. Requires A*(J) inside the domain relations.
/// The quotient is labelled `module_label`, or "<M>/J" when empty.
GroupoidAction quotient_action(const GroupoidAction& a, const Ideal& j, std::string module_label = {});

/// Ideal of the graph {(g.m, g, m)} in k[M] (x) k[G] (x) k[M], blocks N_, G_, M_.
struct GraphIdeal {
  TensorProduct ambient;
  Ideal ideal;
};
GraphIdeal graph_ideal(const GroupoidAction& a);

/// Item names of check_hamiltonian.
inline constexpr const char* kGraphCoisotropic = "graph coisotropic";
inline constexpr const char* kMomentPoisson = "(i) moment is Poisson";
inline constexpr const char* kLiftedBrackets = "(ii) lifted brackets";

/// Verdict: graph coisotropy under (-P_M, P_G, P_M). Diagnostics: the moment is a
/// Poisson map, and brackets of lifts of A*h are lifts of A*{h1, h2}. Lifts are
/// normal forms; condition (ii) is checked over all lifts by also bracketing the
/// leg relations s*f - mu*f with the lifts and with each other.
CheckReport check_hamiltonian(const GroupoidAction& a, const PoissonStructure& pm);
/// Conjunction of the two diagnostic items.
bool hamiltonian_conditions_hold(const CheckReport& r);

/// Actions of G and I on the same M commute: each moment is invariant under the
/// other action, and (id (x) B*) A* equals the re-associated (id (x) A*) B*.
CheckReport check_commuting(const GroupoidAction& a, const GroupoidAction& b);

/// The G x I action on M with moment (mu, nu). Throws VerificationError unless the
/// actions commute.
GroupoidAction product_action(const GroupoidAction& a, const GroupoidAction& b);

/// For an action of a product groupoid, the action of one factor (0 left, 1 right):
/// the other factor acts through its identity arrows.
GroupoidAction factor_action(const GroupoidAction& a, int which);

/// A acting on k[M] (x) k[N] (prefixes L_, R_) through the k[M] factor when
/// `on_left`, through k[N] otherwise, trivially on the other factor.
GroupoidAction extend_action(const GroupoidAction& a, const PresentedAlgebra& other, bool on_left);

/// G acting on X: g . s(g) = t(g).
GroupoidAction base_action(const AffineGroupoid& g);
/// G acting on itself by left multiplication (moment t).
GroupoidAction left_mult_action(const AffineGroupoid& g);
/// G acting on itself by h -> h g^-1 (moment s).
GroupoidAction right_mult_action(const AffineGroupoid& g);

}  // namespace coisored
