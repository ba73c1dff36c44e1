#include "coisored/arith/order.hpp"

#include <algorithm>

#include "coisored/core/error.hpp"

namespace coisored {

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::GRevLex;
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder first, MonomialOrder second) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.split_ = split;
  o.first_ = std::make_shared<const MonomialOrder>(std::move(first));
  o.second_ = std::make_shared<const MonomialOrder>(std::move(second));
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  return compare_range(a, b, 0, a.size());
}

std::strong_ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b,
                                                  std::size_t lo, std::size_t hi) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::GRevLex: {
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      for (std::size_t i = hi; i > lo; --i) {
        if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
      }
      return std::strong_ordering::equal;
    }
    case Kind::Block: {
      std::size_t mid = std::min(hi, lo + split_);
      auto c = first_->compare_range(a, b, lo, mid);
      if (c != 0) return c;
      return second_->compare_range(a, b, mid, hi);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GRevLex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(split_) + "," + first_->describe() + "," +
             second_->describe() + ")";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw InputError("unknown monomial order '" + name + "' (expected lex or grevlex)");
}

}  // namespace coisored
