#include <cstring>
#include <iostream>
#include <string>

#include "tangle/acceptance.hpp"

// Usage: acceptance [--stretch] [--seed N]
int main(int argc, char** argv) {
  tangle::AcceptanceOptions options;
  options.log = &std::cout;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--stretch") == 0) {
      options.stretch = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--stretch] [--seed N]\n";
      return 2;
    }
  }
  const auto results = tangle::run_acceptance(options);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return tangle::all_passed(results) ? 0 : 1;
}
