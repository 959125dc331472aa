// acceptance gate: one line per criterion, nonzero exit on any failure
#include "agq/suite.hpp"

#include <cstdio>

int main() {
  int index = 0;
  agq::SuiteResult res =
      agq::run_suite(agq::SuiteKind::all, [&](const agq::Report& r) {
        ++index;
        std::printf("criterion %2d %-22s %s (%ld ms)\n", index, r.name.c_str(),
                    r.passed() ? "pass" : "FAIL", r.timing_ms);
        for (const auto& d : r.details)
          if (!d.ok)
            std::printf("    %s @ %s: expected %s, got %s\n", d.name.c_str(),
                        d.location.c_str(), d.expected.c_str(),
                        d.actual.c_str());
        std::fflush(stdout);
      });
  std::printf("acceptance: %s\n", res.passed() ? "pass" : "FAIL");
  return res.passed() ? 0 : 1;
}
