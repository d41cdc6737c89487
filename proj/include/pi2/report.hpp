#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pi2 {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
};

/// Named verification outcomes. Serialization is deterministic: checks keep
/// insertion order and carry no timestamps.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Check>& checks() const { return checks_; }

  /// Records a check with an optional witness string.
  CheckReport& add(std::string name, bool ok, std::string witness = {});
  CheckReport& add(Check c);
  /// Appends all checks of another report, prefixing their names.
  CheckReport& merge(const CheckReport& other, const std::string& prefix = {});

  /// Free-form derivation notes; serialized under "notes".
  CheckReport& note(std::string text);
  const std::vector<std::string>& notes() const { return notes_; }

  /// Optional payload (matrices, lattice bases) emitted at high verbosity.
  nlohmann::ordered_json& detail() { return detail_; }
  const nlohmann::ordered_json& detail() const { return detail_; }

  /// Pass iff every check passes; Inconclusive if none failed but some are
  /// inconclusive. An empty report passes.
  Status status() const;
  bool ok() const { return status() == Status::Pass; }

  /// The first failing check, if any.
  const Check* first_failure() const;

  nlohmann::ordered_json to_json(bool verbose = false) const;

 private:
  std::string name_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
  nlohmann::ordered_json detail_;
};

/// Top-level CLI output: a command, its sections and an overall conclusion.
struct Certificate {
  std::string command;
  std::vector<CheckReport> sections;
  std::vector<std::string> notes;
  double timing_ms = 0.0;

  Status conclusion() const;
  /// Keys in fixed order; `timing_ms` is the only run-dependent field.
  nlohmann::ordered_json to_json(bool verbose = false) const;
};

}  // namespace pi2
