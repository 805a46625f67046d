#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace vermalab {

enum class Status { Pass, Fail, Vacuous, Finding };

std::string_view to_string(Status s);

struct ReportItem {
  std::string label;
  /// Short statement of what was checked.
  std::string anchor;
  Status status = Status::Pass;
  /// Serialized field element (or other value) when the status is fail or finding.
  std::optional<std::string> witness;
  /// Optional free-form data, e.g. eigenvalues or counts.
  nlohmann::json data;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<ReportItem> items;
  std::optional<double> seconds;

  void add(ReportItem item);
  /// Convenience for the common boolean check; `witness` is kept only on failure.
  void check(std::string label, std::string anchor, bool ok, std::string witness = {});
  void finding(std::string label, std::string anchor, std::string witness, nlohmann::json data = {});
  /// Appends the items of another report.
  void extend(const VerificationReport& other);
  /// Merges per label keeping the worst status (fail > finding > pass > vacuous).
  void merge_trial(const VerificationReport& other);

  bool ok() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

}  // namespace vermalab
