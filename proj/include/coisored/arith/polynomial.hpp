#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coisored/arith/monomial.hpp"
#include "coisored/arith/order.hpp"
#include "coisored/arith/ring.hpp"

namespace coisored {

/// Exact rational scalar; GMP keeps it in lowest terms with positive denominator.
using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Multivariate polynomial over Q. Terms are stored without zero coefficients,
/// sorted decreasingly in grevlex, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
  /// Accepts terms in any order with repeats and zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  std::uint64_t degree() const;
  /// Leading term with respect to an arbitrary order (the stored order is grevlex).
  const Term& leading_term(const MonomialOrder& order) const;
  bool uses_variable(std::size_t i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t i) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Algebra map sending variable i of f's ring to images[i], a polynomial over `target`.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target);
/// Name-keyed variant; every variable occurring in f needs an image.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);
/// Moves f into `target`, sending each variable to the variable named rename(name).
Polynomial rename(const Polynomial& f, const RingPtr& target,
                  const std::function<std::string(const std::string&)>& rename);
/// Moves f into a ring that contains all of f's variables under the same names.
Polynomial rebase(const Polynomial& f, const RingPtr& target);

}  // namespace coisored
