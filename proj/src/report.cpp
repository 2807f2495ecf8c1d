#include "singwb/report.hpp"

#include <algorithm>

namespace swb {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail; });
}

void Report::add(std::string name, bool pass, json witness) {
  checks.push_back({std::move(name), pass ? Status::Pass : Status::Fail, std::move(witness), 0});
}

void Report::skip(std::string name, json why) {
  checks.push_back({std::move(name), Status::Skipped, std::move(why), 0});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check d = c;
    d.name = prefix + c.name;
    checks.push_back(std::move(d));
  }
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

size_t Report::failures() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Status::Fail; });
}

json run_report_json(const std::string& command, const Report& r, unsigned long long seed,
                     bool with_timing) {
  std::vector<Check> sorted = r.checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  json out;
  out["command"] = command;
  json arr = json::array();
  for (const auto& c : sorted) {
    json j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness;
    j["runtime_ms"] = with_timing ? c.runtime_ms : 0;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  out["seed"] = seed;
  out["version"] = library_version();
  return out;
}

const char* library_version() { return "0.1.0"; }

}  // namespace swb
