#include "a5/verify/report.hpp"

#include <algorithm>

namespace a5 {

void Report::add(std::string id, int criterion, bool passed, std::string details) {
  checks_.push_back({std::move(id), criterion, passed, std::move(details)});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

bool Report::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& c : checks_) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

std::size_t Report::failures() const {
  return std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e = {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}};
    if (c.criterion) e["criterion"] = c.criterion;
    list.push_back(std::move(e));
  }
  return {{"checks", list}, {"passed", passed()}, {"failures", failures()}};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.id;
    if (!c.details.empty()) out += "  " + c.details;
    out += '\n';
  }
  out += std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) + " checks passed\n";
  return out;
}

}  // namespace a5
