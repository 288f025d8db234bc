#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "eggbeater/cli/config.hpp"

namespace eggbeater::cli {

/// Everything a command produces, before it is rendered in the requested format.
struct Report {
  nlohmann::ordered_json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string title;
  std::vector<std::string> summary;  // extra lines under the table
  std::vector<std::string> warnings;
  bool invariants_ok = true;
};

Report cmd_analyze_word(const RunConfig& config);
Report cmd_fixed_points(const RunConfig& config);
Report cmd_growth_scan(const RunConfig& config);
Report cmd_oracle_check(const RunConfig& config);

std::string render(const Report& report, OutputFormat format);

const std::vector<std::string>& command_names();

/// Runs a command and writes its output. Returns the process exit status:
/// 0 success, 1 usage, 2 computation error, 3 invariant failure.
int run_command(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eggbeater::cli
