// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdlib>
#include <iostream>

#include "cdual/corpus.hpp"

int main(int argc, char** argv) {
  cdual::AcceptanceOptions o;
  if (argc > 1) o.seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (const auto& r : cdual::run_acceptance(o)) {
    all = all && r.passed;
    std::cout << cdual::format_result(r) << "\n";
    for (const auto& d : r.diagnostics) std::cout << "      " << d << "\n";
  }
  return all ? 0 : 1;
}
