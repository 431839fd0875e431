// For a sphere dimension given on the command line, report which small
// primes admit a free linear-sphere-like action by each criterion.

#include "exosphere/exosphere.hpp"

#include <cstdlib>
#include <iostream>

namespace {

const char* text(exosphere::Verdict v) {
  switch (v) {
    case exosphere::Verdict::Guaranteed:
      return "guaranteed";
    case exosphere::Verdict::CriterionInapplicable:
      return "inapplicable";
    default:
      return "not guaranteed";
  }
}

}  // namespace

int main(int argc, char** argv) {
  const long long n = argc > 1 ? std::atoll(argv[1]) : 23;
  std::cout << "free Z/p actions on homotopy " << n << "-spheres\n\n";
  std::cout << "p     order criterion   dimension criterion   regularity criterion\n";
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    std::cout << p << "\t"
              << text(exosphere::free_action_by_order(n, p).verdict);
    if (p == 2 || n < 5) {
      std::cout << "\t-\t-\n";
      continue;
    }
    std::cout << "\t" << text(exosphere::little_criterion(n, p).verdict)
              << "\t" << text(exosphere::funny_criterion(n, p).verdict)
              << "\n";
  }
  const auto d = exosphere::little_criterion(n >= 5 ? n : 5, 5);
  std::cout << "\nsample reasoning trail (p = 5):\n";
  for (const auto& c : d.reasons)
    std::cout << "  " << (c.passed ? "[ok]  " : "[fail]") << " "
              << c.condition << ": " << c.witness << "\n";
  return 0;
}
