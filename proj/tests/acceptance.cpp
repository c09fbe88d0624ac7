// One PASS/FAIL line per criterion, details indented below it.
#include <iostream>

#include "../tools/reproduce.hpp"

int main() {
  using namespace foxcolor::reproduce;
  bool all = true;
  run_all(Options{}, [&](const Check& c) {
    std::cout << status(c) << " " << c.id << " " << c.title << "\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    all = all && (c.pass || c.skipped);
  });
  return all ? 0 : 1;
}
