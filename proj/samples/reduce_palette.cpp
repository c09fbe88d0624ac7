// Search 6_2 mod 11 down to five colors and replay the certificate.
#include <iostream>

#include "foxcolor/knot_table.hpp"
#include "foxcolor/search.hpp"

using namespace foxcolor;

int main() {
  Diagram d = find_knot("6_2")->pd;
  SearchOptions opt;
  opt.target_size = 5;
  opt.all_classes = false;
  ClassResult r = minimize_colors(d, Modulus(11), opt).front();
  std::cout << r.start_palette.to_string() << " -> " << r.best_palette.to_string() << '\n';
  for (const auto& mv : r.certificate.moves) std::cout << "  " << mv.to_string() << '\n';
  auto v = verify_certificate(d, r.certificate);
  std::cout << (v.ok ? "certificate ok" : "certificate rejected: " + v.reason) << '\n';
  return v.ok ? 0 : 1;
}
