#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coisored {

/// Evidence for a failed identity: the generator it was checked on and the
/// nonzero normal form that should have vanished.
struct Witness {
  std::string generator;
  std::string residue;
};

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<Witness> witness;
};

/// Ordered list of named verdicts produced by one verification routine.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void pass(std::string name, std::string detail = {});
  void fail(std::string name, Witness witness, std::string detail = {});
  void record(std::string name, bool ok, std::string detail = {});
  /// Appends the items of `other`, prefixing their names.
  void append(const CheckReport& other, const std::string& prefix = {});

  const std::string& title() const { return title_; }
  const std::vector<CheckItem>& items() const { return items_; }
  bool passed() const;
  const CheckItem* first_failure() const;
  bool has(const std::string& name) const;
  const CheckItem& item(const std::string& name) const;

  std::string to_text() const;

 private:
  std::string title_;
  std::vector<CheckItem> items_;
};

}  // namespace coisored
