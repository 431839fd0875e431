// Walk the Mahowald-invariant registry and print every action conclusion
// it supports, grouped by prime.

#include "exosphere/exosphere.hpp"

#include <iostream>

int main() {
  long long current_p = 0;
  for (const auto& entry : exosphere::mahowald_registry()) {
    if (entry.p != current_p) {
      current_p = entry.p;
      std::cout << "\np = " << current_p << "\n";
    }
    const auto c = exosphere::classify_schultz_stolz(entry);
    std::cout << "  " << entry.source_name << " -> " << entry.target_name
              << " (stem " << entry.target_stem << "): ";
    switch (c.kind) {
      case exosphere::ActionKind::Involution:
        std::cout << "free involution on a homotopy " << c.target_stem
                  << "-sphere, fixed set " << c.fixed_set;
        break;
      case exosphere::ActionKind::ZpAction:
        std::cout << "Z/" << c.p << " action, fixed set " << c.fixed_set;
        break;
      case exosphere::ActionKind::CircleAction:
        std::cout << "circle action, fixed-set dimension " << c.fixed_dim;
        break;
      case exosphere::ActionKind::NoConclusion:
        std::cout << "no conclusion";
        for (const auto& reason : c.failed_conditions)
          std::cout << "\n      " << reason;
        break;
    }
    std::cout << "\n";
  }
  return 0;
}
