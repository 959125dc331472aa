#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace agq {

struct CheckDetail {
  std::string name;
  bool ok = true;
  std::string location;  // "(n,c)=(3,1)", "q^17", ...
  std::string expected;
  std::string actual;
};

// Structured result of one verification run. status is pass iff no
// detail failed; "error" is reserved for parameter/usage problems and
// is set by the caller.
struct Report {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<CheckDetail> details;
  std::optional<long> seed;
  std::optional<int> precision_bits;
  long timing_ms = 0;
  bool usage_error = false;

  bool passed() const {
    for (const auto& d : details)
      if (!d.ok) return false;
    return !usage_error;
  }

  std::string status() const {
    if (usage_error) return "error";
    return passed() ? "pass" : "fail";
  }

  void param(const std::string& key, const std::string& value) {
    params[key] = value;
  }
  template <typename T>
  void param(const std::string& key, const T& value) {
    std::ostringstream out;
    out << value;
    params[key] = out.str();
  }

  void ok(const std::string& check) { details.push_back({check, true, "", "", ""}); }
  void ok(const std::string& check, const std::string& location) {
    details.push_back({check, true, location, "", ""});
  }
  void fail(const std::string& check, const std::string& location,
            const std::string& expected, const std::string& actual) {
    details.push_back({check, false, location, expected, actual});
  }
};

}  // namespace agq
