#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coisored/arith/polynomial.hpp"

namespace coisored {

struct BasisCache;

/// Ideal of a polynomial ring given by generators. Reduced Groebner bases are
/// computed on demand and cached per monomial order; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// The ideal generated by these generators together with `more`.
  Ideal plus(const std::vector<Polynomial>& more) const;
  Ideal operator+(const Ideal& other) const { return plus(other.gens_); }

  /// Reduced Groebner basis under `order` (cached, write-once).
  const std::vector<Polynomial>& basis(const MonomialOrder& order) const;
  /// Unique remainder of f under `order`.
  Polynomial normal_form(const Polynomial& f, const MonomialOrder& order) const;
  Polynomial normal_form(const Polynomial& f) const;
  /// Membership, decided in the ideal's membership order (the default order unless hinted).
  bool contains(const Polynomial& f) const;
  bool is_unit() const;

  /// Same ideal, but membership tests use `order`. Useful when one block of
  /// variables is defined by the others and an elimination order keeps the basis small.
  Ideal with_membership_order(MonomialOrder order) const;
  const MonomialOrder& membership_order() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<BasisCache> cache_;
  std::shared_ptr<const MonomialOrder> membership_order_;
};

/// Order of `Ideal::normal_form(f)` and of membership tests without a hint
/// (grevlex unless changed). Set it before computing; it is not synchronised.
const MonomialOrder& default_order();
void set_default_order(MonomialOrder order);

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order);
bool ideal_membership(const Polynomial& f, const Ideal& I);

/// Equality of ideals, via reduced grevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b);

/// I intersected with k[keep], over a ring of just the kept variables (in their
/// original relative order). Basis of the result is reduced under `inner`.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& keep,
                        const MonomialOrder& inner = MonomialOrder::grevlex());

struct Tag {
  std::string name;
  Polynomial generator;
};

/// Expresses f as a polynomial in the tag variables modulo I, or returns nullopt when
/// f is not in the subalgebra generated by the tag generators (plus I). The result
/// lives in a ring whose variables are the tag names, in order.
std::optional<Polynomial> subalgebra_express(const Polynomial& f, const std::vector<Tag>& tags,
                                             const Ideal& I);

}  // namespace coisored
