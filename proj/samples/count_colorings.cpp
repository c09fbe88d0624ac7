// Determinant, nullity and coloring classes for a few table knots.
#include <iostream>

#include "foxcolor/automorphism.hpp"
#include "foxcolor/knot_table.hpp"
#include "foxcolor/linalg.hpp"

using namespace foxcolor;

int main() {
  for (const char* name : {"4_1", "6_2", "7_3"}) {
    Diagram d = find_knot(name)->pd;
    SNFSummary s = link_determinant(d);
    std::cout << name << " det " << s.det_link << '\n';
    for (int p : {3, 5, 7, 11, 13}) {
      if (s.nullity_of(p) < 2) continue;
      auto cls = equivalence_classes(d, Modulus(p));
      std::cout << "  mod " << p << ": " << enumerate_nontrivial(d, Modulus(p)).size() << " colorings in "
                << cls.size() << " classes, " << min_colors_on_diagram(d, Modulus(p)) << " colors on this diagram\n";
    }
  }
}
