// Acceptance suite: one PASS/FAIL line per criterion at full sample counts.
// Tolerances live in tools/checks.cpp. Exits 1 if any criterion fails.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  const auto results = flatmod::checks::run_all(flatmod::checks::Scale::full(), seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " :: "
              << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
