#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coisored/action/action.hpp"
#include "coisored/core/error.hpp"

namespace coisored {

/// Input error with a location in a session file.
class SessionError : public InputError {
 public:
  SessionError(const std::string& source, int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct SessionAction {
  GroupoidAction action;
  std::optional<PoissonStructure> poisson;
  /// Set when built by bimodule(I): the name of I.
  std::optional<std::string> bimodule_of;
};

/// Named entities declared by a session file, in declaration order. Each
/// declaration may refer to earlier names only.
class Session {
 public:
  struct Entry {
    std::string kind;
    std::string name;
    int line = 0;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t count(const std::string& kind) const;
  /// Name of the last declared entity of this kind; InputError when there is none.
  std::string last(const std::string& kind) const;
  bool has(const std::string& name) const;
  std::string kind_of(const std::string& name) const;

  const PresentedAlgebra& ring(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
  const PoissonStructure& poisson(const std::string& name) const;
  const AlgebraMorphism& morphism(const std::string& name) const;
  const AffineGroupoid& groupoid(const std::string& name) const;
  const Subgroupoid& subgroupoid(const std::string& name) const;
  const SessionAction& action(const std::string& name) const;

  void add_ring(const std::string& name, PresentedAlgebra a, int line);
  void add_ideal(const std::string& name, Ideal i, int line);
  void add_poisson(const std::string& name, PoissonStructure p, int line);
  void add_morphism(const std::string& name, AlgebraMorphism m, int line);
  void add_groupoid(const std::string& name, AffineGroupoid g, int line);
  void add_subgroupoid(const std::string& name, Subgroupoid h, int line);
  void add_action(const std::string& name, SessionAction a, int line);

 private:
  void declare(const std::string& kind, const std::string& name, int line);
  const std::string& require(const std::string& name, const std::string& kind) const;

  std::vector<Entry> entries_;
  std::map<std::string, std::string> kinds_;
  std::map<std::string, PresentedAlgebra> rings_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, PoissonStructure> poissons_;
  std::map<std::string, AlgebraMorphism> morphisms_;
  std::map<std::string, AffineGroupoid> groupoids_;
  std::map<std::string, Subgroupoid> subgroupoids_;
  std::map<std::string, SessionAction> actions_;
};

Session parse_session(const std::string& text, const std::string& source = "<session>");
/// Reads and parses a file; SessionError on unreadable files too.
Session parse_session_file(const std::string& path);

}  // namespace coisored
