// Which single colors could possibly be dropped from a palette?
#include <iostream>

#include "foxcolor/obstruction.hpp"

using namespace foxcolor;

int main(int argc, char** argv) {
  int m = argc > 1 ? std::stoi(argv[1]) : 11;
  Palette s = parse_palette(argc > 2 ? argv[2] : "0,2,3,4,8", m);
  for (const auto& r : screen_candidates(s, Modulus(m))) {
    std::cout << "drop " << r.removed << " -> " << r.subset.to_string() << ": ";
    if (!r.blocked()) {
      std::cout << "no obstruction\n";
      continue;
    }
    for (Test t : r.blocked_by) std::cout << test_name(t) << ' ';
    std::cout << '\n';
  }
}
