#include "coisored/action/action.hpp"
#include "coisored/core/error.hpp"

namespace coisored {

CheckReport check_hamiltonian(const GroupoidAction& a, const PoissonStructure& pm) {
  CheckReport report("hamiltonian: " + a.label);
  const AffineGroupoid& g = a.groupoid;
  if (!same_ring(pm.algebra().ring(), a.module.ring())) {
    throw InputError("hamiltonian check: Poisson structure is not over the module of '" + a.label + "'");
  }
  const PoissonStructure pmod = pm.over(a.module);
  const PoissonStructure& pg = g.total_poisson();

  GraphIdeal graph = graph_ideal(a);
  PoissonStructure on_graph = product_structure({negate(pmod), pg, pmod}, graph.ambient);
  if (auto w = coisotropy_failure(on_graph, graph.ideal)) {
    report.fail(kGraphCoisotropic, *w);
  } else {
    report.pass(kGraphCoisotropic);
  }

  if (auto w = poisson_morphism_failure(g.base_poisson(), pmod, a.moment, +1)) {
    report.fail(kMomentPoisson, *w);
  } else {
    report.pass(kMomentPoisson);
  }

  // Brackets are taken in k[G] (x) k[M] and compared modulo the domain relations.
  const FiberedCoproduct& d = a.domain;
  TensorProduct amb = tensor_product({g.total, a.module}, {kLeftPrefix, kRightPrefix});
  PoissonStructure on_pairs = product_structure({pg, pmod}, amb);
  const RingPtr& ring = amb.result.ring();
  struct Entry {
    std::string name;
    Polynomial lift;
    std::optional<std::size_t> module_var;
  };
  std::vector<Entry> entries;
  for (std::size_t h = 0; h < a.module.size(); ++h) {
    entries.push_back({a.module.ring()->name(h), rebase(d.result.normal_form(a.act.image(h)), ring), h});
  }
  for (std::size_t c = 0; c < g.base.size(); ++c) {
    Polynomial leg = rebase(d.left(g.src.image(c)) - d.right(a.moment.image(c)), ring);
    entries.push_back({"s*" + g.base.ring()->name(c) + " - mu*" + g.base.ring()->name(c), leg, {}});
  }
  bool ok = true;
  for (std::size_t i = 0; i < entries.size() && ok; ++i) {
    for (std::size_t j = i + 1; j < entries.size() && ok; ++j) {
      Polynomial diff = on_pairs.raw_bracket(entries[i].lift, entries[j].lift);
      if (entries[i].module_var && entries[j].module_var) {
        Polynomial hb = pmod.entry(*entries[i].module_var, *entries[j].module_var);
        diff -= rebase(a.act.apply(hb), ring);
      }
      Polynomial nf = d.result.normal_form(rebase(diff, d.result.ring()));
      if (!nf.is_zero()) {
        report.fail(kLiftedBrackets,
                    Witness{"{" + entries[i].name + ", " + entries[j].name + "}", nf.to_string()});
        ok = false;
      }
    }
  }
  if (ok) report.pass(kLiftedBrackets);
  return report;
}

bool hamiltonian_conditions_hold(const CheckReport& r) {
  return r.item(kMomentPoisson).passed && r.item(kLiftedBrackets).passed;
}

}  // namespace coisored
