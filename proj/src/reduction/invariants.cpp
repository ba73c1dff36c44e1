#include <algorithm>
#include <unordered_map>

#include "coisored/core/error.hpp"
#include "coisored/groebner/linalg.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored {

namespace {

void monomials_up_to(std::size_t nvars, std::uint32_t d, std::vector<Monomial::Exponent>& cur,
                     std::size_t var, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= d; ++e) {
    cur[var] = e;
    monomials_up_to(nvars, d - e, cur, var + 1, out);
  }
  cur[var] = 0;
}

// Monomials of degree <= d that no leading monomial of the relations divides,
// sorted decreasingly in grevlex.
std::vector<Monomial> standard_monomials(const PresentedAlgebra& a, int d) {
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Monomial> leads;
  for (const auto& g : a.relations().basis(grevlex)) leads.push_back(g.leading_term(grevlex).mono);
  std::vector<Monomial> all;
  std::vector<Monomial::Exponent> cur(a.size(), 0);
  monomials_up_to(a.size(), static_cast<std::uint32_t>(d), cur, 0, all);
  std::vector<Monomial> out;
  for (auto& m : all) {
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&m](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [&grevlex](const Monomial& x, const Monomial& y) { return grevlex.greater(x, y); });
  return out;
}

}  // namespace

std::string tag_name(std::size_t i, const std::vector<std::string>& taken) {
  auto free = [&taken](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) == taken.end();
  };
  std::vector<std::string> letters;
  for (char c = 'a'; c <= 'z'; ++c) {
    std::string s(1, c);
    if (free(s)) letters.push_back(s);
  }
  if (i < letters.size()) return letters[i];
  std::size_t k = i - letters.size() + 1;
  std::string s = "y" + std::to_string(k);
  while (!free(s)) s = "y" + std::to_string(++k);
  return s;
}

InvariantBasis invariants_up_to_degree(const GroupoidAction& a, int d) {
  if (d < 1) throw InputError("degree bound must be at least 1");
  const PresentedAlgebra& m = a.module;
  const FiberedCoproduct& dom = a.domain;
  std::vector<Monomial> cols = standard_monomials(m, d);

  // Column j holds the normal form of A*(m_j) - 1 (x) m_j.
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Polynomial mono = Polynomial::term(m.ring(), cols[j], Rational(1));
    Polynomial r = dom.result.normal_form(a.act.apply(mono) - dom.right(mono));
    for (const auto& t : r.terms()) {
      auto [it, inserted] = row_of.emplace(t.mono, row_of.size());
      entries[j].emplace_back(it->second, t.coeff);
    }
  }
  RationalMatrix mat(row_of.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [row, c] : entries[j]) mat[row][j] = c;
  }
  RationalMatrix kernel = nullspace(mat, cols.size());

  InvariantBasis out{a, d, std::vector<std::vector<Polynomial>>(static_cast<std::size_t>(d) + 1), {}};
  std::vector<Polynomial> candidates;
  for (const auto& v : kernel) {
    std::vector<Term> terms;
    std::size_t lead = cols.size();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (v[j] == 0) continue;
      if (lead == cols.size()) lead = j;
      terms.push_back(Term{cols[j], v[j]});
    }
    Polynomial f = Polynomial::from_terms(m.ring(), std::move(terms));
    const std::size_t deg = cols[lead].degree();
    out.per_degree[deg].push_back(f);
    if (deg > 0) candidates.push_back(f);
  }
  // Kernel rows come with distinct pivots in decreasing grevlex, hence by degree
  // descending; generators are chosen by degree ascending, then leading term descending.
  std::stable_sort(candidates.begin(), candidates.end(), [](const Polynomial& x, const Polynomial& y) {
    return x.degree() < y.degree();
  });
  std::vector<std::string> taken = m.variables();
  for (const auto& f : candidates) {
    if (subalgebra_express(f, out.generators, m.relations())) continue;
    out.generators.push_back(Tag{tag_name(out.generators.size(), taken), f});
  }
  return out;
}

}  // namespace coisored
