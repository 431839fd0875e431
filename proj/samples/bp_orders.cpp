// Survey of the cyclic bp-sphere groups in low dimensions: order, number
// of digits, and prime support.

#include "exosphere/exosphere.hpp"

#include <iostream>

int main() {
  std::cout << "n      k   digits  order factorization\n";
  for (long long n = 7; n <= 103; n += 4) {
    const auto g = exosphere::theta_bp(n);
    if (g.kind != exosphere::BpKind::Cyclic) continue;
    const exosphere::Factorization f = exosphere::factorize(g.order);
    std::cout << n << "\t" << g.k << "\t" << g.order.str().size() << "\t";
    bool first = true;
    for (const auto& e : f.factors) {
      if (!first) std::cout << " * ";
      first = false;
      std::cout << e.prime.str();
      if (e.exponent > 1) std::cout << "^" << e.exponent;
    }
    std::cout << "\n";
  }
  return 0;
}
