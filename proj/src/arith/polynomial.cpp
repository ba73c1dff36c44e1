#include "coisored/arith/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "coisored/core/error.hpp"

namespace coisored {
namespace {

const MonomialOrder& canonical_order() {
  static const MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

bool canon_greater(const Monomial& a, const Monomial& b) {
  return canonical_order().compare(a, b) > 0;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
      continue;
    }
    auto c = canonical_order().compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->size(), i), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->require(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canon_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  if (order.kind() == MonomialOrder::Kind::GRevLex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& t : terms_) {
    if (t.mono[i] != 0) return true;
  }
  return false;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) {
    throw InputError("variable-list mismatch in polynomial arithmetic");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return canon_greater(a.mono, b.mono); });
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  // Multiplying by a monomial preserves the (multiplicative) term order.
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono[i];
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    exps[i] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * Rational(e)});
  }
  // Lowering one exponent can reorder terms of different degree profiles.
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool neg = t.coeff < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += monomial_to_string(t.mono, *ring_);
    }
  }
  return s;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target) {
  const auto& ring = f.ring();
  if (images.size() != ring->size()) {
    throw InputError("substitution needs one image per variable");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (f.uses_variable(i) && !same_ring(images[i].ring(), target)) {
      throw InputError("substitution image for '" + ring->name(i) + "' is over the wrong ring");
    }
  }
  // Cache powers of images; desk-scale inputs keep this small.
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial p = e == 1 ? images[i] : images[i].pow(e);
    return powers.emplace(key, std::move(p)).first->second;
  };
  Polynomial result(target);
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size() && !prod.is_zero(); ++i) {
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    }
    for (const auto& pt : prod.terms()) acc.push_back(pt);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target) {
  const auto& ring = f.ring();
  std::vector<Polynomial> vec;
  vec.reserve(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto it = images.find(ring->name(i));
    if (it != images.end()) {
      vec.push_back(it->second);
    } else if (f.uses_variable(i)) {
      throw InputError("missing image for variable '" + ring->name(i) + "'");
    } else {
      vec.push_back(Polynomial(target));
    }
  }
  return substitute(f, vec, target);
}

Polynomial rename(const Polynomial& f, const RingPtr& target,
                  const std::function<std::string(const std::string&)>& rename_fn) {
  const auto& ring = f.ring();
  std::vector<std::size_t> map(ring->size(), 0);
  std::vector<bool> used(ring->size(), false);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) used[i] = true;
    }
  }
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (used[i]) map[i] = target->require(rename_fn(ring->name(i)));
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) e[map[i]] += t.mono[i];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial rebase(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) return f;
  return rename(f, target, [](const std::string& s) { return s; });
}

}  // namespace coisored
