// Runs every reproducible claim and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <iostream>

#include "simpson/claims.hpp"

int main() {
  int failed = 0;
  const auto results = simpson::run_all_claims();
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.title << "\n";
    if (!r.passed) {
      ++failed;
      for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    }
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
