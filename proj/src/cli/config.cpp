#include "eggbeater/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "eggbeater/bounds.hpp"

namespace eggbeater::cli {

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  throw UsageError("unknown format '" + text + "' (expected json, csv or table)");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Table: return "table";
  }
  return "?";
}

void RunConfig::validate() const {
  if (L <= 4) throw UsageError("L must exceed 4, got " + eggbeater::format(L));
  if (k && *k < 1) throw UsageError("k must be positive");
  if (k && (k_min || k_max)) throw UsageError("--k cannot be combined with --k-min/--k-max");
  if (k_min && *k_min < 1) throw UsageError("k-min must be positive");
  if (k_min && k_max && *k_max < *k_min) throw UsageError("k-max must not be below k-min");
  if (k_factor < 2) throw UsageError("k-factor must be at least 2");
  if (delta.kind == DeltaPolicy::Kind::Fixed && (delta.value < 0 || delta.value >= Rational(1, 4)))
    throw UsageError("fixed delta must lie in [0, 1/4)");
  if (total_area && *total_area <= 2 * L) throw UsageError("total area must exceed 2L");
}

std::vector<std::int64_t> k_grid(const RunConfig& config, std::int64_t k_min_word) {
  if (config.k) return {*config.k};
  const std::int64_t lo = config.k_min.value_or(k_min_word);
  const std::int64_t hi = config.k_max.value_or(64 * lo);
  if (hi < lo) throw UsageError("k-max must not be below k-min");
  return geometric_grid(lo, hi, config.k_factor);
}

std::vector<std::string> parse_corpus(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

const std::vector<std::string>& default_corpus() {
  static const std::vector<std::string> corpus{
      "H V", "H^2 V", "H V^-1", "H^2 V^3 H^-1 V", "H V H^-1 V^-1", "H^3 V^-2 H^-1 V^4",
  };
  return corpus;
}

}  // namespace eggbeater::cli
