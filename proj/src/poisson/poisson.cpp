#include "coisored/poisson/poisson.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

PoissonStructure::PoissonStructure(PresentedAlgebra algebra, std::vector<Polynomial> matrix)
    : PoissonStructure(unchecked(std::move(algebra), std::move(matrix))) {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!entry(i, i).is_zero()) {
      throw InputError("bracket matrix has a nonzero diagonal entry at '" +
                       algebra_.ring()->name(i) + "'");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entry(i, j) != -entry(j, i)) {
        throw InputError("bracket matrix is not antisymmetric at {" + algebra_.ring()->name(i) +
                         ", " + algebra_.ring()->name(j) + "}");
      }
    }
  }
  if (auto w = poisson_ideal_failure(*this)) {
    throw InputError("relations of '" + algebra_.label() + "' are not a Poisson ideal: " +
                     w->generator + " = " + w->residue);
  }
}

PoissonStructure PoissonStructure::unchecked(PresentedAlgebra algebra,
                                             std::vector<Polynomial> matrix) {
  const std::size_t n = algebra.size();
  if (matrix.size() != n * n) throw InputError("bracket matrix has the wrong size");
  PoissonStructure p;
  p.algebra_ = std::move(algebra);
  p.matrix_.reserve(matrix.size());
  for (auto& m : matrix) p.matrix_.push_back(rebase(m, p.algebra_.ring()));
  return p;
}

PoissonStructure PoissonStructure::from_brackets(
    PresentedAlgebra algebra,
    const std::vector<std::tuple<std::string, std::string, Polynomial>>& brackets) {
  const std::size_t n = algebra.size();
  std::vector<Polynomial> m(n * n, algebra.zero());
  std::vector<bool> seen(n * n, false);
  for (const auto& [a, b, v] : brackets) {
    std::size_t i = algebra.ring()->require(a);
    std::size_t j = algebra.ring()->require(b);
    if (i == j) throw InputError("bracket {" + a + ", " + a + "} must be zero");
    if (seen[i * n + j]) throw InputError("bracket {" + a + ", " + b + "} given twice");
    seen[i * n + j] = seen[j * n + i] = true;
    Polynomial val = rebase(v, algebra.ring());
    m[i * n + j] = val;
    m[j * n + i] = -val;
  }
  return PoissonStructure(std::move(algebra), std::move(m));
}

PoissonStructure PoissonStructure::zero(PresentedAlgebra algebra) {
  const std::size_t n = algebra.size();
  std::vector<Polynomial> m(n * n, algebra.zero());
  return unchecked(std::move(algebra), std::move(m));
}

Polynomial PoissonStructure::raw_bracket(const Polynomial& f0, const Polynomial& g0) const {
  const RingPtr& ring = algebra_.ring();
  Polynomial f = rebase(f0, ring);
  Polynomial g = rebase(g0, ring);
  const std::size_t n = size();
  std::vector<Polynomial> df(n), dg(n);
  std::vector<bool> hf(n, false), hg(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.uses_variable(i)) {
      df[i] = f.derivative(i);
      hf[i] = true;
    }
    if (g.uses_variable(i)) {
      dg[i] = g.derivative(i);
      hg[i] = true;
    }
  }
  std::vector<Term> acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (!hf[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!hg[j] || i == j || entry(i, j).is_zero()) continue;
      Polynomial t = entry(i, j) * df[i] * dg[j];
      acc.insert(acc.end(), t.terms().begin(), t.terms().end());
    }
  }
  return Polynomial::from_terms(ring, std::move(acc));
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
  return algebra_.normal_form(raw_bracket(f, g));
}

PoissonStructure PoissonStructure::over(PresentedAlgebra algebra) const {
  if (!same_ring(algebra.ring(), algebra_.ring())) {
    throw InputError("Poisson structure moved to an algebra with different variables");
  }
  return PoissonStructure(std::move(algebra), matrix_);
}

std::optional<Witness> poisson_ideal_failure(const PoissonStructure& p) {
  // {f, I} in I for all f follows from generators: {x_i, a r} = a{x_i, r} + r{x_i, a}.
  const auto& a = p.algebra();
  for (const auto& r : a.relations().generators()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Polynomial b = p.raw_bracket(a.var(i), r);
      if (!a.is_zero(b)) {
        return Witness{"{" + a.ring()->name(i) + ", " + r.to_string() + "}",
                       a.normal_form(b).to_string()};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> jacobi_failure(const PoissonStructure& p) {
  // The Jacobiator is a triderivation, so vanishing on generator triples suffices.
  const auto& a = p.algebra();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial s = p.raw_bracket(a.var(i), p.entry(j, k)) +
                       p.raw_bracket(a.var(j), p.entry(k, i)) +
                       p.raw_bracket(a.var(k), p.entry(i, j));
        if (!a.is_zero(s)) {
          const auto& r = *a.ring();
          return Witness{"(" + r.name(i) + ", " + r.name(j) + ", " + r.name(k) + ")",
                         a.normal_form(s).to_string()};
        }
      }
    }
  }
  return std::nullopt;
}

bool check_jacobi(const PoissonStructure& p) { return !jacobi_failure(p).has_value(); }

std::optional<Witness> coisotropy_failure(const PoissonStructure& p, const Ideal& ideal) {
  // {a g_i, b g_j} = ab{g_i, g_j} + (terms divisible by g_i or g_j), so generator
  // pairs decide {I, I} in I.
  const auto& a = p.algebra();
  Ideal total = a.relations().plus(ideal.generators());
  if (ideal.generators().empty()) return std::nullopt;
  total = total.with_membership_order(ideal.membership_order());
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Polynomial b = p.raw_bracket(gens[i], gens[j]);
      if (!total.contains(b)) {
        return Witness{"{" + gens[i].to_string() + ", " + gens[j].to_string() + "}",
                       total.normal_form(b).to_string()};
      }
    }
  }
  return std::nullopt;
}

bool check_coisotropic(const PoissonStructure& p, const Ideal& ideal) {
  return !coisotropy_failure(p, ideal).has_value();
}

std::optional<Witness> poisson_morphism_failure(const PoissonStructure& src,
                                                const PoissonStructure& tgt,
                                                const AlgebraMorphism& phi, int sign) {
  if (sign != 1 && sign != -1) throw InputError("Poisson morphism sign must be +1 or -1");
  const auto& s = src.algebra();
  const auto& t = tgt.algebra();
  // Both sides are biderivations in (f, g), so generator pairs suffice.
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Polynomial lhs = phi.apply(src.entry(i, j));
      Polynomial rhs = tgt.raw_bracket(phi.image(i), phi.image(j));
      Polynomial diff = sign > 0 ? lhs - rhs : lhs + rhs;
      if (!t.is_zero(diff)) {
        return Witness{"{" + s.ring()->name(i) + ", " + s.ring()->name(j) + "}",
                       t.normal_form(diff).to_string()};
      }
    }
  }
  return std::nullopt;
}

bool check_poisson_morphism(const PoissonStructure& src, const PoissonStructure& tgt,
                            const AlgebraMorphism& phi, int sign) {
  return !poisson_morphism_failure(src, tgt, phi, sign).has_value();
}

PoissonStructure negate(const PoissonStructure& p) {
  std::vector<Polynomial> m;
  m.reserve(p.matrix().size());
  for (const auto& e : p.matrix()) m.push_back(-e);
  return PoissonStructure::unchecked(p.algebra(), std::move(m));
}

PoissonStructure product_structure(const std::vector<PoissonStructure>& factors,
                                   const TensorProduct& product) {
  const auto& result = product.result;
  const std::size_t n = result.size();
  std::vector<Polynomial> m(n * n, result.zero());
  std::size_t offset = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& inc = product.inclusions[f];
    const std::size_t k = factors[f].size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[(offset + i) * n + offset + j] = inc.apply(factors[f].entry(i, j));
      }
    }
    offset += k;
  }
  // Block-diagonal brackets of Poisson ideals leave the union a Poisson ideal.
  return PoissonStructure::unchecked(result, std::move(m));
}

PoissonStructure product_structure(const PoissonStructure& a, const PoissonStructure& b) {
  TensorProduct tp = tensor_product({a.algebra(), b.algebra()}, {kLeftPrefix, kRightPrefix},
                                    a.algebra().label() + " x " + b.algebra().label());
  return product_structure({a, b}, tp);
}

Polynomial bracket_determinant(const PoissonStructure& p, const std::vector<std::string>& vars) {
  const auto& a = p.algebra();
  const std::size_t n = vars.size();
  if (n > 20) throw InputError("determinant chart too large");
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(a.ring()->require(v));
  // Subset expansion: f[S] sums signed products filling the first |S| rows with columns S.
  std::vector<Polynomial> f(std::size_t(1) << n, a.zero());
  f[0] = a.constant(Rational(1));
  for (std::size_t mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t(1) << c)) continue;
      const Polynomial& e = p.entry(idx[row], idx[c]);
      if (e.is_zero()) continue;
      std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> (c + 1)));
      Polynomial t = f[mask] * e;
      f[mask | (std::size_t(1) << c)] += (above % 2) ? -t : t;
    }
  }
  return f.back();
}

bool is_unit_modulo(const PresentedAlgebra& a, const Polynomial& det) {
  return a.relations().plus({rebase(det, a.ring())}).is_unit();
}

}  // namespace coisored
