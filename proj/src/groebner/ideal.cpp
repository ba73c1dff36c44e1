#include "coisored/groebner/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "coisored/core/error.hpp"
#include "coisored/groebner/groebner.hpp"

namespace coisored {

struct BasisEntry {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Term>> sorted;
};

struct BasisCache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const BasisEntry>> entries;
};

namespace {

const MonomialOrder& grevlex_order() {
  static const MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

// Set once at startup, before any computation reads it.
MonomialOrder& default_order_slot() {
  static MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

// Process-wide memo keyed by (ring, order, generator set). Ideals rebuilt from the
// same data by different operations then share one computation.
struct GlobalMemo {
  std::mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const BasisEntry>> entries;
};

GlobalMemo& memo() {
  static GlobalMemo m;
  return m;
}

std::string memo_key(const Ideal& I, const MonomialOrder& order) {
  std::string key = order.describe();
  key += '|';
  for (const auto& n : I.ring()->names()) {
    key += n;
    key += ',';
  }
  std::vector<std::string> gens;
  for (const auto& g : I.generators()) {
    if (!g.is_zero()) gens.push_back(g.to_string());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    key += '|';
    key += g;
  }
  return key;
}

std::shared_ptr<const BasisEntry> compute_entry(const Ideal& I, const MonomialOrder& order) {
  std::string key = memo_key(I, order);
  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    auto it = memo().entries.find(key);
    if (it != memo().entries.end()) return it->second;
  }
  auto entry = std::make_shared<BasisEntry>();
  entry->basis = buchberger(I.generators(), I.ring(), order, default_pair_budget());
  for (const auto& b : entry->basis) entry->sorted.push_back(sorted_terms(b, order));
  std::lock_guard<std::mutex> lock(memo().mutex);
  // Another thread may have won the race; the first stored value is kept.
  return memo().entries.emplace(key, entry).first->second;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<BasisCache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) {
      throw InputError("ideal generator is over a different variable list");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> all = gens_;
  for (const auto& m : more) all.push_back(rebase(m, ring_));
  Ideal out(ring_, std::move(all));
  out.membership_order_ = membership_order_;
  return out;
}

static std::shared_ptr<const BasisEntry> entry_for(const Ideal& I, BasisCache& cache,
                                                   const MonomialOrder& order) {
  std::string key = order.describe();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  auto entry = compute_entry(I, order);
  std::lock_guard<std::mutex> lock(cache.mutex);
  return cache.entries.emplace(key, entry).first->second;
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order) const {
  return entry_for(*this, *cache_, order)->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f, const MonomialOrder& order) const {
  Polynomial g = rebase(f, ring_);
  if (gens_.empty() || g.is_zero()) return g;
  auto entry = entry_for(*this, *cache_, order);
  return reduce_full(g, entry->sorted, order);
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return normal_form(f, default_order_slot());
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, membership_order()).is_zero();
}

bool Ideal::is_unit() const { return contains(Polynomial::constant(ring_, Rational(1))); }

Ideal Ideal::with_membership_order(MonomialOrder order) const {
  Ideal out(*this);
  out.membership_order_ = std::make_shared<const MonomialOrder>(std::move(order));
  return out;
}

const MonomialOrder& Ideal::membership_order() const {
  return membership_order_ ? *membership_order_ : default_order_slot();
}

const MonomialOrder& default_order() { return default_order_slot(); }

void set_default_order(MonomialOrder order) { default_order_slot() = std::move(order); }

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& order) {
  return I.basis(order);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order) {
  return I.normal_form(f, order);
}

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  const auto& ba = a.basis(grevlex_order());
  const auto& bb = b.basis(grevlex_order());
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (ba[i].terms() != bb[i].terms()) return false;
  }
  return true;
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& keep,
                        const MonomialOrder& inner) {
  const auto& ring = *I.ring();
  std::vector<bool> kept(ring.size(), false);
  for (const auto& k : keep) kept[ring.require(k)] = true;
  std::vector<std::string> eliminated_first, kept_names;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!kept[i]) eliminated_first.push_back(ring.name(i));
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (kept[i]) kept_names.push_back(ring.name(i));
  }
  std::size_t split = eliminated_first.size();
  std::vector<std::string> all = eliminated_first;
  all.insert(all.end(), kept_names.begin(), kept_names.end());
  RingPtr permuted = make_ring(all);
  RingPtr small = make_ring(kept_names);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(rebase(g, permuted));
  Ideal J(permuted, std::move(gens));
  MonomialOrder order = MonomialOrder::block(split, MonomialOrder::grevlex(), inner);
  std::vector<Polynomial> out;
  for (const auto& b : J.basis(order)) {
    bool only_kept = true;
    for (std::size_t i = 0; i < split && only_kept; ++i) {
      if (b.uses_variable(i)) only_kept = false;
    }
    if (only_kept) out.push_back(rebase(b, small));
  }
  return Ideal(small, std::move(out));
}

std::optional<Polynomial> subalgebra_express(const Polynomial& f, const std::vector<Tag>& tags,
                                             const Ideal& I) {
  const auto& ring = *I.ring();
  std::vector<std::string> names = ring.names();
  std::vector<std::string> tag_names;
  for (const auto& t : tags) {
    if (ring.index(t.name)) throw InputError("tag variable '" + t.name + "' is not fresh");
    names.push_back(t.name);
    tag_names.push_back(t.name);
  }
  RingPtr big = make_ring(names);
  RingPtr tag_ring = make_ring(tag_names);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(rebase(g, big));
  for (const auto& t : tags) {
    gens.push_back(Polynomial::variable(big, t.name) - rebase(t.generator, big));
  }
  Ideal J(big, std::move(gens));
  MonomialOrder order =
      MonomialOrder::block(ring.size(), MonomialOrder::grevlex(), MonomialOrder::grevlex());
  Polynomial r = J.normal_form(rebase(f, big), order);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (r.uses_variable(i)) return std::nullopt;
  }
  return rename(r, tag_ring, [](const std::string& s) { return s; });
}

}  // namespace coisored
