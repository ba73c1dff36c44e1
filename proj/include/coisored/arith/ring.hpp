#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coisored {

/// An ordered list of variable names. Polynomials refer to one of these; the
/// declaration order fixes the variable enumeration used by every monomial order.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// True when both pointers denote the same variable list (by identity or by names).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Identifier grammar accepted in session files: [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

}  // namespace coisored
