#pragma once

#include <string>
#include <vector>

#include "fiatcell/shadow_json.hpp"

namespace fiatcell {

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
  Json details = Json::object();
};

/// Ordered list of named pass/fail checks. Serializes as
/// {"subject", "status", "checks": [{"check", "status", "witnesses", "details"}]}.
class Report {
 public:
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  Check& add(std::string name, bool passed, std::vector<std::string> witnesses = {},
             Json details = Json::object());
  void append(const Report& other);

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  bool passed() const;

  Json to_json() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace fiatcell
