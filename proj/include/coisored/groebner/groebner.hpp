#pragma once

#include <cstddef>
#include <vector>

#include "coisored/arith/polynomial.hpp"

namespace coisored {

/// Default cap on processed S-pairs. Initialised from COISORED_BUDGET when set.
std::size_t default_pair_budget();
void set_default_pair_budget(std::size_t budget);

/// Reduced Groebner basis of the ideal generated by `gens` under `order`, sorted by
/// decreasing leading monomial and made monic. Throws BudgetExceeded past `budget` pairs.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const MonomialOrder& order, std::size_t budget);

/// Terms of `p` sorted decreasingly under `order`.
std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& order);

/// Full remainder of f modulo a Groebner basis given as `sorted_terms` vectors.
Polynomial reduce_full(const Polynomial& f, const std::vector<std::vector<Term>>& basis,
                       const MonomialOrder& order);

}  // namespace coisored
