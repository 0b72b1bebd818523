#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace a5 {

struct Check {
  std::string id;
  int criterion = 0;  // acceptance criterion number, 0 for supplementary checks
  bool passed = false;
  std::string details;
};

/// Ordered list of checks; order is the order of insertion.
class Report {
 public:
  void add(std::string id, int criterion, bool passed, std::string details = {});
  void merge(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  /// True when the criterion has at least one check and all of them pass.
  bool criterion_passed(int criterion) const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace a5
