#include "coisored/algebra/check_report.hpp"

#include "coisored/core/error.hpp"

namespace coisored {

void CheckReport::pass(std::string name, std::string detail) {
  items_.push_back({std::move(name), true, std::move(detail), std::nullopt});
}

void CheckReport::fail(std::string name, Witness witness, std::string detail) {
  items_.push_back({std::move(name), false, std::move(detail), std::move(witness)});
}

void CheckReport::record(std::string name, bool ok, std::string detail) {
  items_.push_back({std::move(name), ok, std::move(detail), std::nullopt});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& it : other.items_) {
    CheckItem copy = it;
    copy.name = prefix + copy.name;
    items_.push_back(std::move(copy));
  }
}

bool CheckReport::passed() const { return first_failure() == nullptr; }

const CheckItem* CheckReport::first_failure() const {
  for (const auto& it : items_) {
    if (!it.passed) return &it;
  }
  return nullptr;
}

bool CheckReport::has(const std::string& name) const {
  for (const auto& it : items_) {
    if (it.name == name) return true;
  }
  return false;
}

const CheckItem& CheckReport::item(const std::string& name) const {
  for (const auto& it : items_) {
    if (it.name == name) return it;
  }
  throw Error("no check named '" + name + "' in report '" + title_ + "'");
}

std::string CheckReport::to_text() const {
  std::string s = title_ + ": " + (passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& it : items_) {
    s += "  [" + std::string(it.passed ? "pass" : "FAIL") + "] " + it.name;
    if (!it.detail.empty()) s += " -- " + it.detail;
    s += "\n";
    if (it.witness) {
      s += "      witness: generator " + it.witness->generator + ", residue " +
           it.witness->residue + "\n";
    }
  }
  return s;
}

}  // namespace coisored
