// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional arguments restrict the run to named sections.

#include <cstdio>
#include <string>
#include <vector>

#include "semireg/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> sections(argv + 1, argv + argc);
  semireg::VerifyReport rep = semireg::run_verification(sections);
  for (const auto& r : rep.results)
    std::printf("[%s] criterion %2d %-17s %7.2fs / %5.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.section.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
  if (!rep.growth.empty()) {
    std::printf("corpus growth (informational): |V|  pairs  min  max witness order\n");
    for (const auto& row : rep.growth)
      std::printf("  %4zu  %5zu  %4llu  %4llu\n", row.vertices, row.pairs,
                  static_cast<unsigned long long>(row.min_witness),
                  static_cast<unsigned long long>(row.max_witness));
  }
  std::printf("%s\n", rep.passed() ? "all criteria passed" : "some criteria FAILED");
  return rep.passed() ? 0 : 1;
}
