#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sturmian::cli {

struct CommandResult {
  bool ok = true;
  int exit_code = 0;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  /// Human-readable rendering of the payload.
  std::string text;
  bool json_output = false;

  nlohmann::json to_json() const;
  /// What the executable prints on stdout.
  std::string render() const;
};

/// Runs one command line (without the program name).
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace sturmian::cli
