#include <iostream>

#include "szego/acceptance.hpp"

int main(int argc, char** argv) {
  std::string golden = argc > 1 ? argv[1] : "configs/golden";
  const auto results =
      szego::run_acceptance(szego::VerifyLevel::Full, std::cout, golden);
  return szego::acceptance_exit_code(results);
}
