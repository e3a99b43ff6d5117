#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  const sturmian::cli::CommandResult result =
      sturmian::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
  (result.exit_code == 0 ? std::cout : std::cerr) << result.render();
  return result.exit_code;
}
