// Acceptance suite: runs every verification criterion and prints one
// PASS/FAIL line per criterion. Exit status 0 iff everything passed.

#include <cstdlib>
#include <iostream>
#include <string>

#include "ecalg/verify.hpp"

int main(int argc, char** argv) {
  ecalg::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--workers" && i + 1 < argc) {
      opts.workers = std::atoi(argv[++i]);
    }
  }
  const auto results = ecalg::run_acceptance(opts);
  ecalg::print_acceptance(std::cout, results);
  if (!ecalg::all_passed(results)) {
    std::cout << "acceptance: FAILED\n";
    return 1;
  }
  std::cout << "acceptance: all " << results.size() << " criteria passed\n";
  return 0;
}
