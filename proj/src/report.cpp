#include "fiatcell/report.hpp"

#include <algorithm>

namespace fiatcell {

Check& Report::add(std::string name, bool passed, std::vector<std::string> witnesses, Json details) {
  checks_.push_back({std::move(name), passed, std::move(witnesses), std::move(details)});
  return checks_.back();
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const Check& c : checks_) {
    Json entry;
    entry["check"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["witnesses"] = c.witnesses;
    if (!c.details.empty()) entry["details"] = c.details;
    checks.push_back(std::move(entry));
  }
  Json j;
  j["subject"] = subject_;
  j["status"] = passed() ? "pass" : "fail";
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace fiatcell
