#include "coisored/core/error.hpp"
#include "coisored/groupoid/groupoid.hpp"

namespace coisored {

namespace {

// A polynomial in a throwaway ring; make_groupoid rebases images by variable name.
Polynomial named(const std::string& name) {
  return Polynomial::variable(make_ring({name}), std::size_t{0});
}

Polynomial one() { return Polynomial::constant(make_ring({}), Rational(1)); }

std::vector<std::string> prefixed(const std::string& prefix, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(prefix + v);
  return out;
}

std::string strip(const std::string& name, std::size_t n) { return name.substr(n); }

}  // namespace

AffineGroupoid pair_groupoid(const PresentedAlgebra& x, const PoissonStructure& p) {
  if (!same_ring(p.algebra().ring(), x.ring())) {
    throw InputError("pair groupoid: Poisson structure is not over '" + x.label() + "'");
  }
  if (!is_unit_modulo(x, bracket_determinant(p, x.variables()))) {
    throw InputError("pair groupoid: the bracket on '" + x.label() + "' is degenerate");
  }
  TensorProduct tp = tensor_product({x, x}, {kLeftPrefix, kRightPrefix},
                                    x.label() + " x " + x.label());
  std::vector<Polynomial> src, tgt, unit, inv, mult;
  for (const auto& v : x.variables()) {
    src.push_back(named("R_" + v));
    tgt.push_back(named("L_" + v));
  }
  for (const auto& v : tp.result.variables()) {
    const std::string base_name = strip(v, 2);
    const bool left = v.rfind(kLeftPrefix, 0) == 0;
    unit.push_back(named(base_name));
    inv.push_back(named((left ? "R_" : "L_") + base_name));
    mult.push_back(named(left ? "L_L_" + base_name : "R_R_" + base_name));
  }
  AffineGroupoid g = make_groupoid("Pair(" + x.label() + ")", x, tp.result, src, tgt, unit, inv,
                                   mult);
  return with_symplectic(std::move(g), product_structure({p, negate(p)}, tp), p);
}

AffineGroupoid cotangent_groupoid_torus(int n) {
  if (n < 1) throw InputError("cotangent_torus needs n >= 1");
  auto idx = [n](const std::string& stem, int i) {
    return n == 1 ? stem : stem + std::to_string(i + 1);
  };
  std::vector<std::string> base_vars, total_vars;
  for (int i = 0; i < n; ++i) base_vars.push_back(idx("z", i));
  for (const char* stem : {"t", "u", "z"}) {
    for (int i = 0; i < n; ++i) total_vars.push_back(idx(stem, i));
  }
  PresentedAlgebra base = PresentedAlgebra::free(base_vars, "k[z]");
  RingPtr ring = make_ring(total_vars);
  std::vector<Polynomial> rels;
  for (int i = 0; i < n; ++i) {
    rels.push_back(Polynomial::variable(ring, idx("t", i)) * Polynomial::variable(ring, idx("u", i)) -
                   Polynomial::constant(ring, Rational(1)));
  }
  PresentedAlgebra total(ring, rels, "T*Gm^" + std::to_string(n));

  std::vector<Polynomial> src, tgt, unit, inv, mult;
  for (const auto& z : base_vars) {
    src.push_back(named(z));
    tgt.push_back(named(z));
  }
  for (const auto& v : total_vars) {
    const char stem = v[0];
    const std::string rest = v.substr(1);
    if (stem == 'z') {
      unit.push_back(named(v));
      inv.push_back(named(v));
      mult.push_back(named("L_" + v));
    } else {
      unit.push_back(one());
      inv.push_back(named((stem == 't' ? "u" : "t") + rest));
      RingPtr pair = make_ring({"L_" + v, "R_" + v});
      mult.push_back(Polynomial::variable(pair, std::size_t{0}) *
                     Polynomial::variable(pair, std::size_t{1}));
    }
  }
  AffineGroupoid g = make_groupoid("T*Gm^" + std::to_string(n), base, total, src, tgt, unit, inv,
                                   mult);
  // {t_i, z_i} = t_i, and {u_i, z_i} = -u_i so that t_i u_i - 1 generates a Poisson ideal.
  std::vector<std::tuple<std::string, std::string, Polynomial>> brackets;
  std::vector<std::string> chart;
  for (int i = 0; i < n; ++i) {
    brackets.emplace_back(idx("t", i), idx("z", i), total.var(idx("t", i)));
    brackets.emplace_back(idx("u", i), idx("z", i), -total.var(idx("u", i)));
    chart.push_back(idx("t", i));
    chart.push_back(idx("z", i));
  }
  return with_symplectic(std::move(g), PoissonStructure::from_brackets(total, brackets),
                         PoissonStructure::zero(base), std::move(chart));
}

AffineGroupoid trivial_groupoid() {
  PresentedAlgebra k = PresentedAlgebra::point();
  AffineGroupoid g = make_groupoid("trivial", k, k, {}, {}, {}, {}, {});
  return with_symplectic(std::move(g), PoissonStructure::zero(k), PoissonStructure::zero(k));
}

AffineGroupoid negate(const AffineGroupoid& g) {
  AffineGroupoid out = g;
  out.label = g.label + "^-";
  if (g.symplectic) {
    out.symplectic->total = negate(g.symplectic->total);
    out.symplectic->base = negate(g.symplectic->base);
  }
  return out;
}

AffineGroupoid product_groupoid(const AffineGroupoid& g, const AffineGroupoid& h) {
  TensorProduct base = tensor_product({g.base, h.base}, {kLeftPrefix, kRightPrefix},
                                      g.base.label() + " x " + h.base.label());
  TensorProduct total = tensor_product({g.total, h.total}, {kLeftPrefix, kRightPrefix},
                                       g.total.label() + " x " + h.total.label());
  const RingPtr& bring = base.result.ring();
  const RingPtr& tring = total.result.ring();
  auto with_prefix = [](const std::string& pre) {
    return [pre](const std::string& v) { return pre + v; };
  };
  std::vector<Polynomial> src, tgt, unit, inv, mult;
  const AffineGroupoid* parts[2] = {&g, &h};
  const std::string pre[2] = {kLeftPrefix, kRightPrefix};
  for (int f = 0; f < 2; ++f) {
    for (std::size_t c = 0; c < parts[f]->base.size(); ++c) {
      src.push_back(rename(parts[f]->src.image(c), tring, with_prefix(pre[f])));
      tgt.push_back(rename(parts[f]->tgt.image(c), tring, with_prefix(pre[f])));
    }
  }
  // Composable pairs of the product: L_L_* / R_L_* for the first factor's arrows.
  std::vector<std::string> pair_vars;
  for (const auto& v : tring->names()) pair_vars.push_back("L_" + v);
  for (const auto& v : tring->names()) pair_vars.push_back("R_" + v);
  RingPtr pring = make_ring(pair_vars);
  for (int f = 0; f < 2; ++f) {
    const std::string& p = pre[f];
    auto into_pairs = [&p](const std::string& v) { return v.substr(0, 2) + p + v.substr(2); };
    for (std::size_t x = 0; x < parts[f]->total.size(); ++x) {
      unit.push_back(rename(parts[f]->unit.image(x), bring, with_prefix(p)));
      inv.push_back(rename(parts[f]->inv.image(x), tring, with_prefix(p)));
      mult.push_back(rename(parts[f]->mult.image(x), pring, into_pairs));
    }
  }
  AffineGroupoid out = make_groupoid(g.label + " x " + h.label, base.result, total.result, src, tgt,
                                     unit, inv, mult);
  if (g.symplectic && h.symplectic) {
    std::vector<std::string> chart = prefixed(kLeftPrefix, g.symplectic->chart);
    for (auto& v : prefixed(kRightPrefix, h.symplectic->chart)) chart.push_back(v);
    out = with_symplectic(
        std::move(out), product_structure({g.symplectic->total, h.symplectic->total}, total),
        product_structure({g.symplectic->base, h.symplectic->base}, base), std::move(chart));
  }
  out.factors = std::make_shared<const ProductFactors>(ProductFactors{g, h});
  return out;
}

}  // namespace coisored
