#pragma once

#include <random>
#include <string>
#include <vector>

#include "coisored/arith/parse.hpp"
#include "coisored/core/error.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored::testing {

inline RingPtr ring_of(std::vector<std::string> names) { return make_ring(std::move(names)); }

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

/// Random polynomial with small integer coefficients: up to `terms` terms of total
/// degree <= `degree`.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int terms, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> var(0, static_cast<int>(r->size()) - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->size());
    const int d = deg(rng);
    for (int e = 0; e < d && r->size() > 0; ++e) m = m * Monomial::variable(r->size(), var(rng));
    out.push_back(Term{m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(r, std::move(out));
}

inline PresentedAlgebra canonical_k4() {
  return PresentedAlgebra::free({"q1", "q2", "p1", "p2"}, "k4");
}

inline PoissonStructure canonical_bracket(const PresentedAlgebra& m) {
  return PoissonStructure::from_brackets(
      m, {{"q1", "p1", m.constant(1)}, {"q2", "p2", m.constant(1)}});
}

/// T*Gm acting on k^4 with weights (1, -1) on (q1, q2), (-1, 1) on (p1, p2).
inline GroupoidAction flagship_action(const AffineGroupoid& t, const PresentedAlgebra& m) {
  auto d = ring_of({"L_t", "L_u", "L_z", "R_q1", "R_q2", "R_p1", "R_p2"});
  return make_action("flagship", t, m, {P(m.ring(), "q1*p1 - q2*p2")},
                     Ps(d, {"L_t*R_q1", "L_u*R_q2", "L_u*R_p1", "L_t*R_p2"}));
}

}  // namespace coisored::testing
