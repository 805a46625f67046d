#include "vermalab/report.hpp"

#include <map>
#include <stdexcept>

namespace vermalab {

namespace {

int severity(Status s) {
  switch (s) {
    case Status::Vacuous: return 0;
    case Status::Pass: return 1;
    case Status::Finding: return 2;
    case Status::Fail: return 3;
  }
  return 0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
    case Status::Finding: return "finding";
  }
  return "?";
}

void VerificationReport::add(ReportItem item) {
  if ((item.status == Status::Fail || item.status == Status::Finding) && !item.witness)
    throw std::logic_error("fail/finding item without witness: " + item.label);
  items.push_back(std::move(item));
}

void VerificationReport::check(std::string label, std::string anchor, bool ok, std::string witness) {
  ReportItem it{std::move(label), std::move(anchor), ok ? Status::Pass : Status::Fail, std::nullopt, {}};
  if (!ok) it.witness = witness.empty() ? std::string("nonzero") : std::move(witness);
  add(std::move(it));
}

void VerificationReport::finding(std::string label, std::string anchor, std::string witness, nlohmann::json data) {
  add({std::move(label), std::move(anchor), Status::Finding, std::move(witness), std::move(data)});
}

void VerificationReport::extend(const VerificationReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

void VerificationReport::merge_trial(const VerificationReport& other) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < items.size(); ++k) index.emplace(items[k].label, k);
  for (const auto& it : other.items) {
    auto f = index.find(it.label);
    if (f == index.end()) {
      index.emplace(it.label, items.size());
      items.push_back(it);
    } else if (severity(it.status) > severity(items[f->second].status)) {
      items[f->second] = it;
    }
  }
}

bool VerificationReport::ok() const { return count(Status::Fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  std::size_t c = 0;
  for (const auto& it : items) c += it.status == s ? 1 : 0;
  return c;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& it : items) {
    nlohmann::json e;
    e["label"] = it.label;
    e["anchor"] = it.anchor;
    e["status"] = std::string(to_string(it.status));
    if (it.witness) e["witness"] = *it.witness;
    if (!it.data.is_null()) e["data"] = it.data;
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"finding", count(Status::Finding)},
                  {"vacuous", count(Status::Vacuous)}};
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "label,anchor,status,witness\n";
  for (const auto& it : items)
    out += csv_field(it.label) + "," + csv_field(it.anchor) + "," + std::string(to_string(it.status)) + "," +
           csv_field(it.witness.value_or("")) + "\n";
  return out;
}

}  // namespace vermalab
