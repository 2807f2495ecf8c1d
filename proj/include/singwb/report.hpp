#pragma once

#include <string>
#include <vector>

#include "singwb/serialize.hpp"

namespace swb {

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  json witness;  // null on pass unless something useful is attached
  long runtime_ms = 0;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, json witness = nullptr);
  void skip(std::string name, json why = nullptr);
  // Appends other's checks with `prefix` prepended to every name.
  void merge(const Report& other, const std::string& prefix = "");
  const Check* find(const std::string& name) const;
  size_t failures() const;
};

// {command, checks (sorted by name), seed, version}. Runtimes are written only
// when `with_timing` is set so that default output is byte-stable.
json run_report_json(const std::string& command, const Report& r, unsigned long long seed,
                     bool with_timing = false);

const char* library_version();

}  // namespace swb
