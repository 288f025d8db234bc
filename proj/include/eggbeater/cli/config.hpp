#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eggbeater/geometry.hpp"
#include "eggbeater/rational.hpp"

namespace eggbeater::cli {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_format(const std::string& text);
const char* to_string(OutputFormat f);

/// Bad flags or flag values; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string word;
  Rational L{5};
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> k_min;
  std::optional<std::int64_t> k_max;
  std::int64_t k_factor = 2;
  DeltaPolicy delta = DeltaPolicy::one_over_k();
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> out;
  std::optional<std::string> corpus;
  std::optional<Rational> total_area;
  // Test mode for oracle-check: perturbs one record so the oracles must object.
  bool inject_fault = false;

  /// Checks the ModelParams invariants that do not depend on k, and the grid flags.
  void validate() const;
};

/// k values requested by the config: {k} when --k is set, otherwise the
/// geometric grid. Missing grid ends default to k_min_word and 64 k_min_word.
std::vector<std::int64_t> k_grid(const RunConfig& config, std::int64_t k_min_word);

/// One word literal per line; blank lines and text after '#' are ignored.
std::vector<std::string> read_corpus(const std::string& path);
std::vector<std::string> parse_corpus(const std::string& text);

/// The acceptance corpus (the commutator enters through its balanced form).
const std::vector<std::string>& default_corpus();

}  // namespace eggbeater::cli
