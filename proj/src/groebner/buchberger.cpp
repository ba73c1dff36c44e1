#include "coisored/groebner/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "coisored/core/error.hpp"

namespace coisored {
namespace {

std::atomic<std::size_t>& budget_slot() {
  static std::atomic<std::size_t> slot = [] {
    std::size_t b = 200000;
    if (const char* env = std::getenv("COISORED_BUDGET")) {
      try {
        b = static_cast<std::size_t>(std::stoull(env));
      } catch (const std::exception&) {
        // Unparseable values fall back to the built-in default.
      }
    }
    return b;
  }();
  return slot;
}

using Terms = std::vector<Term>;

struct GPoly {
  Terms terms;
  std::uint64_t sugar = 0;
  const Monomial& lm() const { return terms.front().mono; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Engine {
 public:
  Engine(const RingPtr& ring, const MonomialOrder& order) : ring_(ring), order_(order) {}

  bool greater(const Monomial& a, const Monomial& b) const { return order_.compare(a, b) > 0; }

  // f - c*m*g restricted to f[pos+1..] and g[1..]: the leading terms cancel by construction.
  Terms subtract_multiple(const Terms& f, std::size_t pos, const Rational& c, const Monomial& m,
                          const Terms& g) const {
    Terms out;
    out.reserve(f.size() - pos + g.size());
    std::size_t i = pos + 1, j = 1;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      Monomial gm = g[j].mono * m;
      if (i == f.size()) {
        out.push_back({std::move(gm), -c * g[j].coeff});
        ++j;
        continue;
      }
      auto cmp = order_.compare(f[i].mono, gm);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -c * g[j].coeff});
        ++j;
      } else {
        Rational s = f[i].coeff - c * g[j].coeff;
        if (s != 0) out.push_back({f[i].mono, s});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of f by the basis polynomials (any subset of indices).
  Terms reduce(Terms f, const std::vector<const Terms*>& basis) const {
    Terms result;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term& lead = f[pos];
      const Terms* divisor = nullptr;
      for (const Terms* g : basis) {
        if (g->front().mono.divides(lead.mono)) {
          divisor = g;
          break;
        }
      }
      if (divisor) {
        Rational c = lead.coeff / divisor->front().coeff;
        Monomial m = lead.mono / divisor->front().mono;
        f = subtract_multiple(f, pos, c, m, *divisor);
        pos = 0;
      } else {
        result.push_back(lead);
        ++pos;
      }
    }
    return result;
  }

  static void make_monic(Terms& t) {
    if (t.empty()) return;
    Rational lc = t.front().coeff;
    if (lc == 1) return;
    for (auto& x : t) x.coeff /= lc;
  }

  Terms spoly(const GPoly& a, const GPoly& b, const Monomial& lcm) const {
    Monomial ma = lcm / a.lm();
    Monomial mb = lcm / b.lm();
    Terms sa;
    sa.reserve(a.terms.size());
    for (const auto& t : a.terms) sa.push_back({t.mono * ma, t.coeff / a.terms.front().coeff});
    Rational c = Rational(1) / b.terms.front().coeff;
    return subtract_multiple(sa, 0, c, mb, b.terms);
  }

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens, std::size_t budget) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!same_ring(g.ring(), ring_)) throw InputError("generator over the wrong variable list");
      GPoly p;
      p.terms = sorted_terms(g, order_);
      p.sugar = g.degree();
      make_monic(p.terms);
      input_.push_back(std::move(p));
    }
    // Process inputs in increasing leading-monomial order for more reductions early.
    std::stable_sort(input_.begin(), input_.end(),
                     [&](const GPoly& a, const GPoly& b) { return greater(b.lm(), a.lm()); });
    for (auto& p : input_) {
      std::vector<const Terms*> active;
      for (const auto& g : basis_) active.push_back(&g.terms);
      Terms r = reduce(p.terms, active);
      if (r.empty()) continue;
      make_monic(r);
      if (insert({std::move(r), p.sugar})) return {Polynomial::constant(ring_, Rational(1))};
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && greater(b.lcm, a.lcm))) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++processed > budget) {
        throw BudgetExceeded("Groebner basis computation exceeded the budget of " +
                             std::to_string(budget) + " S-pairs");
      }
      Terms s = spoly(basis_[pr.i], basis_[pr.j], pr.lcm);
      std::vector<const Terms*> active;
      for (const auto& g : basis_) active.push_back(&g.terms);
      Terms r = reduce(std::move(s), active);
      if (r.empty()) continue;
      make_monic(r);
      if (insert({std::move(r), pr.sugar})) return {Polynomial::constant(ring_, Rational(1))};
    }
    return finish();
  }

 private:
  // Adds h to the basis and updates the pair set with the Gebauer-Moeller criteria.
  // Returns true when h is a nonzero constant.
  bool insert(GPoly h) {
    if (h.lm().is_one()) return true;
    std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    const Monomial& lh = basis_[hi].lm();

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (redundant_[g]) continue;
      Monomial l = Monomial::lcm(basis_[g].lm(), lh);
      std::uint64_t sug = std::max(basis_[g].sugar + l.degree() - basis_[g].lm().degree(),
                                   basis_[hi].sugar + l.degree() - lh.degree());
      fresh.push_back({g, hi, std::move(l), sug});
    }
    // Chain criterion among the new pairs: drop (g,h) when some other new pair's lcm
    // properly divides lcm(g,h), or equals it and appears earlier.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) {
          keep[a] = false;
        }
      }
    }
    // Product criterion: coprime leading monomials need no S-pair.
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (basis_[fresh[a].i].lm().coprime(lh)) continue;
      accepted.push_back(std::move(fresh[a]));
    }
    // Old pairs made superfluous by h.
    std::vector<Pair> remaining;
    for (auto& p : pairs_) {
      bool drop = false;
      if (lh.divides(p.lcm)) {
        Monomial li = Monomial::lcm(basis_[p.i].lm(), lh);
        Monomial lj = Monomial::lcm(basis_[p.j].lm(), lh);
        drop = li != p.lcm && lj != p.lcm;
      }
      if (!drop) remaining.push_back(std::move(p));
    }
    pairs_ = std::move(remaining);
    for (auto& p : accepted) pairs_.push_back(std::move(p));
    redundant_.push_back(false);
    for (std::size_t g = 0; g < hi; ++g) {
      if (!redundant_[g] && lh.divides(basis_[g].lm())) redundant_[g] = true;
    }
    return false;
  }

  std::vector<Polynomial> finish() {
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> minimal;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < basis_.size() && !dominated; ++b) {
        if (a == b) continue;
        const Monomial& la = basis_[a].lm();
        const Monomial& lb = basis_[b].lm();
        if (lb.divides(la) && (lb != la || b < a)) dominated = true;
      }
      if (!dominated) minimal.push_back(a);
    }
    std::vector<Terms> reduced;
    for (std::size_t a : minimal) {
      std::vector<const Terms*> others;
      for (std::size_t b : minimal) {
        if (b != a) others.push_back(&basis_[b].terms);
      }
      Terms head{basis_[a].terms.front()};
      Terms tail(basis_[a].terms.begin() + 1, basis_[a].terms.end());
      Terms rt = reduce(std::move(tail), others);
      head.insert(head.end(), rt.begin(), rt.end());
      make_monic(head);
      reduced.push_back(std::move(head));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
      return greater(a.front().mono, b.front().mono);
    });
    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (auto& t : reduced) out.push_back(Polynomial::from_terms(ring_, std::move(t)));
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<GPoly> input_;
  std::vector<GPoly> basis_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::size_t default_pair_budget() { return budget_slot().load(); }

void set_default_pair_budget(std::size_t budget) { budget_slot().store(budget); }

std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Term> t = p.terms();
  if (order.kind() != MonomialOrder::Kind::GRevLex) {
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  }
  return t;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const MonomialOrder& order, std::size_t budget) {
  return Engine(ring, order).run(gens, budget);
}

Polynomial reduce_full(const Polynomial& f, const std::vector<std::vector<Term>>& basis,
                       const MonomialOrder& order) {
  Engine engine(f.ring(), order);
  std::vector<const std::vector<Term>*> active;
  active.reserve(basis.size());
  for (const auto& b : basis) active.push_back(&b);
  return Polynomial::from_terms(f.ring(), engine.reduce(sorted_terms(f, order), active));
}

}  // namespace coisored
