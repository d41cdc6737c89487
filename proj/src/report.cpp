#include "pi2/report.hpp"

namespace pi2 {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

CheckReport& CheckReport::add(std::string name, bool ok, std::string witness) {
  checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)});
  return *this;
}

CheckReport& CheckReport::add(Check c) {
  checks_.push_back(std::move(c));
  return *this;
}

CheckReport& CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    checks_.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.status, c.witness});
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
  if (!other.detail_.is_null()) {
    detail_[prefix.empty() ? other.name_ : prefix] = other.detail_;
  }
  return *this;
}

CheckReport& CheckReport::note(std::string text) {
  notes_.push_back(std::move(text));
  return *this;
}

Status CheckReport::status() const {
  Status s = Status::Pass;
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

const Check* CheckReport::first_failure() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

nlohmann::ordered_json CheckReport::to_json(bool verbose) const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["status"] = to_string(status());
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!notes_.empty()) j["notes"] = notes_;
  if (verbose && !detail_.is_null()) j["detail"] = detail_;
  return j;
}

Status Certificate::conclusion() const {
  Status s = Status::Pass;
  for (const auto& sec : sections) {
    Status t = sec.status();
    if (t == Status::Fail) return Status::Fail;
    if (t == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

nlohmann::ordered_json Certificate::to_json(bool verbose) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = std::string(kToolVersion);
  auto secs = nlohmann::ordered_json::array();
  for (const auto& s : sections) secs.push_back(s.to_json(verbose));
  j["sections"] = std::move(secs);
  j["conclusion"] = to_string(conclusion());
  if (!notes.empty()) j["notes"] = notes;
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace pi2
