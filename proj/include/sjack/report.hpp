#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sjack {

/// Outcome of a verification routine: ok, or a list of mismatch descriptions.
struct CheckReport {
  bool ok = true;
  long long checked = 0;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) fail(what);
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    if (!other.ok) ok = false;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  explicit operator bool() const { return ok; }
};

}  // namespace sjack
