#pragma once

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "coisored/reduction/reduction.hpp"

namespace coisored {

using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Json to_json(const CheckReport& r);
/// {"label", "variables", "relations"}; relations are the reduced grevlex basis.
Json to_json(const PresentedAlgebra& a);
/// Nonzero brackets {x_i, x_j}, i < j, as {"left", "right", "value"}.
Json to_json(const PoissonStructure& p);
/// {"source", "target", "images": {variable: polynomial}}.
Json to_json(const AlgebraMorphism& m);
Json to_json(const GroupoidAction& a);
Json to_json(const InvariantBasis& inv);
Json to_json(const ReductionResult& r);

/// Accumulates session-file text that re-parses into the given entities. Names
/// are chosen by the caller; derived names (rings of a groupoid) get suffixes.
class SessionWriter {
 public:
  void ring(const std::string& name, const PresentedAlgebra& a);
  void poisson(const std::string& name, const std::string& ring_name, const PoissonStructure& p);
  /// Declares <name>_base and <name>_total (and their Poisson structures when
  /// symplectic) followed by the groupoid block.
  void groupoid(const std::string& name, const AffineGroupoid& g);
  void action(const std::string& name, const GroupoidAction& a, const std::string& groupoid_name,
              const std::string& module_name, const std::optional<std::string>& poisson_name);

  const std::string& text() const { return text_; }

 private:
  void header(const std::string& kind, const std::string& name);
  void list(const std::string& key, const std::vector<std::string>& values);
  void map(const std::string& key, const AlgebraMorphism& m);

  std::string text_;
  std::set<std::string> names_;
};

}  // namespace coisored
