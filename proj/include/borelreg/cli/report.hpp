#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace borelreg::cli {

struct MethodResult {
  std::string method;
  nlohmann::json value;
  nlohmann::json witnesses;  ///< null when there is nothing to show
};

struct Agreement {
  std::string a;
  std::string b;
  bool equal = true;
};

struct Report {
  std::string command;
  std::string input;
  std::size_t ambient = 0;
  std::vector<MethodResult> results;
  std::vector<Agreement> agreements;
  std::vector<std::string> discrepancy_notes;

  bool has_disagreement() const;
};

nlohmann::json to_json(const Report& report);
std::string render_text(const Report& report);

/// Error object printed in JSON mode before a nonzero exit.
nlohmann::json error_json(const std::string& command, const std::string& input,
                          const std::string& kind, const std::string& message, int exit_code);

}  // namespace borelreg::cli
