#include <random>
#include <sstream>

#include "coisored/core/error.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored {

std::pair<PresentedAlgebra, AlgebraMorphism> present_reduced(const PresentedAlgebra& fiber,
                                                             const std::vector<Tag>& generators) {
  std::vector<std::string> names = fiber.variables();
  std::vector<std::string> keep;
  for (const auto& t : generators) {
    names.push_back(t.name);
    keep.push_back(t.name);
  }
  RingPtr big = make_ring(names);
  std::vector<Polynomial> gens;
  for (const auto& r : fiber.relations().generators()) gens.push_back(rebase(r, big));
  for (const auto& t : generators) {
    gens.push_back(Polynomial::variable(big, t.name) - rebase(t.generator, big));
  }
  Ideal j = elimination_ideal(Ideal(big, std::move(gens)), keep);
  PresentedAlgebra reduced(j, "reduced");
  std::vector<Polynomial> images;
  for (const auto& t : generators) images.push_back(t.generator);
  return {reduced, AlgebraMorphism(reduced, fiber, std::move(images))};
}

std::pair<PresentedAlgebra, AlgebraMorphism> present_reduced(const InvariantBasis& inv) {
  if (inv.generators.empty()) throw InputError("no invariant generators to present");
  return present_reduced(inv.action.module, inv.generators);
}

ReductionResult reduced_bracket(const InvariantBasis& inv, const PoissonStructure& pm, int cap) {
  const PresentedAlgebra& fiber = inv.action.module;
  const PresentedAlgebra& ambient = pm.algebra();
  if (!same_ring(ambient.ring(), fiber.ring())) {
    throw InputError("reduced bracket: Poisson structure is not over the module variables");
  }
  std::vector<Tag> gens = inv.generators;
  std::vector<std::string> log;
  std::vector<std::string> taken = fiber.variables();
  for (int round = 0;; ++round) {
    auto [reduced, projection] = present_reduced(fiber, gens);
    const std::size_t n = gens.size();
    std::vector<Polynomial> matrix(n * n, reduced.zero());
    std::optional<Tag> added;
    for (std::size_t i = 0; i < n && !added; ++i) {
      for (std::size_t j = i + 1; j < n && !added; ++j) {
        Polynomial br = fiber.normal_form(rebase(
            pm.raw_bracket(rebase(gens[i].generator, ambient.ring()),
                           rebase(gens[j].generator, ambient.ring())),
            fiber.ring()));
        auto expr = subalgebra_express(br, gens, fiber.relations());
        if (expr) {
          Polynomial e = reduced.normal_form(rebase(*expr, reduced.ring()));
          matrix[i * n + j] = e;
          matrix[j * n + i] = -e;
          continue;
        }
        if (round >= cap) {
          throw BudgetExceeded("closure loop reached its cap of " + std::to_string(cap) +
                      " rounds; stuck element " + br.to_string());
        }
        if (!check_invariant(inv.action, br)) {
          throw VerificationError("bracket of invariants is not invariant",
                                  "{" + gens[i].name + ", " + gens[j].name + "} = " + br.to_string());
        }
        added = Tag{tag_name(n, taken), br};
        log.push_back("added " + added->name + " = " + br.to_string() + " from {" + gens[i].name +
                      ", " + gens[j].name + "}");
      }
    }
    if (added) {
      gens.push_back(*added);
      continue;
    }
    PoissonStructure rp = [&] {
      try {
        return PoissonStructure(reduced, matrix);
      } catch (const InputError& e) {
        throw VerificationError("reduced bracket does not preserve the relations", e.what());
      }
    }();
    if (auto w = jacobi_failure(rp)) {
      throw VerificationError("reduced bracket fails Jacobi", w->generator + " -> " + w->residue);
    }
    std::vector<Polynomial> lifts;
    for (const auto& t : gens) lifts.push_back(rebase(t.generator, ambient.ring()));
    return ReductionResult{reduced, rp,  projection,     gens, lifts, log, inv.action, pm,
                           inv.degree_bound};
  }
}

ReductionResult reduce_restricted(const GroupoidAction& a, const Subgroupoid& h,
                                  const PoissonStructure& pm, int d, int cap) {
  GroupoidAction r = restrict_action(a, h);
  InvariantBasis inv = invariants_up_to_degree(r, d);
  return reduced_bracket(inv, pm, cap);
}

ReductionResult reduce_quotient(const GroupoidAction& a, const std::vector<Polynomial>& base_ideal,
                                const PoissonStructure& pm, int d, int cap) {
  std::vector<Polynomial> fiber;
  for (const auto& f : base_ideal) fiber.push_back(a.moment.apply(rebase(f, a.groupoid.base.ring())));
  // Labelled like the restricted route's fiber so both routes report identically.
  GroupoidAction q = quotient_action(a, Ideal(a.module.ring(), fiber), a.module.label() + "|fiber");
  InvariantBasis inv = invariants_up_to_degree(q, d);
  return reduced_bracket(inv, pm, cap);
}

namespace {

class Sampler {
 public:
  Sampler(const Ideal& ideal, std::uint64_t seed)
      : basis_(ideal.basis(MonomialOrder::grevlex())), ring_(ideal.ring()), rng_(seed) {}

  // A random combination of basis elements with coefficients of degree <= 1.
  Polynomial element() {
    Polynomial out(ring_);
    if (basis_.empty()) return out;
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> var(0, ring_->size());
    for (const auto& g : basis_) {
      int c = coeff(rng_);
      if (c == 0) continue;
      std::size_t v = var(rng_);
      Polynomial mult = v == ring_->size() ? Polynomial::constant(ring_, Rational(c))
                                           : Polynomial::variable(ring_, v).scaled(Rational(c));
      out += mult * g;
    }
    return out;
  }

 private:
  std::vector<Polynomial> basis_;
  RingPtr ring_;
  std::mt19937_64 rng_;
};

}  // namespace

CheckReport verify_reduction(const ReductionResult& r, int trials, std::uint64_t seed) {
  CheckReport report("reduction evidence");
  const PresentedAlgebra& fiber = r.fiber_action.module;
  const PoissonStructure& pm = r.ambient_poisson;
  const RingPtr& amb = pm.algebra().ring();
  std::vector<Polynomial> fiber_gens;
  for (const auto& g : fiber.relations().generators()) fiber_gens.push_back(rebase(g, amb));
  Ideal fiber_ideal(amb, fiber_gens);
  Sampler sampler(fiber_ideal, seed);
  const std::size_t n = r.lifts.size();
  auto project = [&](const Polynomial& f) { return fiber.normal_form(rebase(f, fiber.ring())); };
  auto pair_name = [&](std::size_t i, std::size_t j) {
    return "{" + r.generators[i].name + ", " + r.generators[j].name + "}";
  };

  std::optional<Witness> lift_fail;
  for (int t = 0; t < trials && !lift_fail; ++t) {
    std::vector<Polynomial> lifts;
    for (const auto& f : r.lifts) lifts.push_back(f + sampler.element());
    for (std::size_t i = 0; i < n && !lift_fail; ++i) {
      for (std::size_t j = i + 1; j < n && !lift_fail; ++j) {
        Polynomial got = project(pm.raw_bracket(lifts[i], lifts[j]));
        Polynomial want = project(r.projection.apply(r.reduced_poisson.entry(i, j)));
        if (got != want) lift_fail = Witness{pair_name(i, j), (got - want).to_string()};
      }
    }
  }
  if (lift_fail) {
    report.fail("(a) lift independence", *lift_fail);
  } else {
    report.pass("(a) lift independence", std::to_string(trials) + " trials");
  }

  std::optional<Witness> inv_fail;
  for (std::size_t i = 0; i < n && !inv_fail; ++i) {
    for (std::size_t j = i + 1; j < n && !inv_fail; ++j) {
      Polynomial br = project(pm.raw_bracket(r.lifts[i], r.lifts[j]));
      if (!check_invariant(r.fiber_action, br)) inv_fail = Witness{pair_name(i, j), br.to_string()};
    }
  }
  if (inv_fail) {
    report.fail("(b) brackets invariant", *inv_fail);
  } else {
    report.pass("(b) brackets invariant");
  }

  std::optional<Witness> ideal_fail;
  std::vector<Polynomial> probes = fiber_gens;
  for (int t = 0; t < trials; ++t) probes.push_back(sampler.element());
  for (std::size_t i = 0; i < n && !ideal_fail; ++i) {
    for (const auto& e : probes) {
      Polynomial br = project(pm.raw_bracket(r.lifts[i], e));
      if (!br.is_zero()) {
        ideal_fail = Witness{"{" + r.generators[i].name + ", " + e.to_string() + "}", br.to_string()};
        break;
      }
    }
  }
  if (ideal_fail) {
    report.fail("(c) lifts preserve the fiber ideal", *ideal_fail);
  } else {
    report.pass("(c) lifts preserve the fiber ideal");
  }

  if (auto w = jacobi_failure(r.reduced_poisson)) {
    report.fail("(d) Jacobi", *w);
  } else {
    report.pass("(d) Jacobi");
  }
  return report;
}

std::string describe(const ReductionResult& r) {
  std::ostringstream out;
  out << "reduced algebra: k[";
  const auto& vars = r.reduced.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? ", " : "") << vars[i];
  out << "] / <";
  const auto& rels = r.reduced.relations().basis(MonomialOrder::grevlex());
  for (std::size_t i = 0; i < rels.size(); ++i) out << (i ? ", " : "") << rels[i].to_string();
  if (rels.empty()) out << "0";
  out << ">\n";
  out << "degree bound: " << r.degree_bound << "\n";
  out << "generators:\n";
  for (const auto& t : r.generators) out << "  " << t.name << " = " << t.generator.to_string() << "\n";
  out << "brackets:\n";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      const Polynomial& e = r.reduced_poisson.entry(i, j);
      if (e.is_zero()) continue;
      out << "  {" << vars[i] << ", " << vars[j] << "} = " << e.to_string() << "\n";
    }
  }
  out << "closure:";
  if (r.closure_log.empty()) out << " none";
  out << "\n";
  for (const auto& line : r.closure_log) out << "  " << line << "\n";
  return out.str();
}

}  // namespace coisored
