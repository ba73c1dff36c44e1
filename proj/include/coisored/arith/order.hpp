#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

#include "coisored/arith/monomial.hpp"

namespace coisored {

/// Lexicographic, graded reverse lexicographic, or a block order: the first
/// `split` variables are compared with one order, ties broken on the rest with
/// another. Block orders with the eliminated variables first are elimination orders.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Block };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder block(std::size_t split, MonomialOrder first, MonomialOrder second);

  Kind kind() const { return kind_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable textual key, e.g. "grevlex" or "block(2,grevlex,lex)".
  std::string describe() const;

  bool operator==(const MonomialOrder& other) const { return describe() == other.describe(); }

 private:
  MonomialOrder() = default;
  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const;

  Kind kind_ = Kind::GRevLex;
  std::size_t split_ = 0;
  std::shared_ptr<const MonomialOrder> first_;
  std::shared_ptr<const MonomialOrder> second_;
};

/// Parses "lex" or "grevlex".
MonomialOrder parse_order(const std::string& name);

}  // namespace coisored
