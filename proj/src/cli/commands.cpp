#include "eggbeater/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "eggbeater/bounds.hpp"
#include "eggbeater/floer.hpp"
#include "eggbeater/oracles/forward_iteration.hpp"
#include "eggbeater/oracles/word_bruteforce.hpp"

namespace eggbeater::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaPrefix = "eggbeater/";

std::string schema_id(const std::string& command) { return kSchemaPrefix + command + "/v1"; }

std::string decimal12(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
  return buf;
}

ordered_json opt_rational(const std::optional<Rational>& q) {
  return q ? ordered_json(format(*q)) : ordered_json(nullptr);
}

std::string opt_cell(const std::optional<Rational>& q) { return q ? format(*q) : std::string(); }

ordered_json balanced_json(const BalancedWord& b) {
  return {{"word", b.str()}, {"r", b.r()}, {"N", b.N}, {"M", b.M}};
}

FreeWord parse_nontrivial(const std::string& literal) {
  FreeWord w = FreeWord::parse(literal);
  if (w.is_identity()) throw Error(ErrorKind::TrivialWord, "the word '" + literal + "' is the identity");
  return w;
}

BalancedWord require_long(const FreeWord& w) {
  const auto bal = to_balanced(w);
  if (!bal) throw Error(ErrorKind::InvalidArgument, "'" + w.str() + "' is conjugate to a power of one generator");
  return *bal;
}

const FixedPointRecord& find_record(const std::vector<FixedPointRecord>& records, const SignVector& eps) {
  for (const auto& rec : records)
    if (rec.eps == eps) return rec;
  throw Error(ErrorKind::MissingRecords, "no record for " + eps.str());
}

}  // namespace

// ------------------------------------------------------------ analyze-word

Report cmd_analyze_word(const RunConfig& config) {
  const FreeWord w = parse_nontrivial(config.word);
  const FreeWord cyc = cyclically_reduce(w);
  const auto bal = to_balanced(w);
  const NormBounds nb = triple_norm_bounds(w);
  const bool long_word = is_long(w);

  Report rep;
  rep.title = "analyze-word " + w.str();
  rep.json = {{"schema", schema_id("analyze-word")},
              {"word", config.word},
              {"reduced", w.str()},
              {"cyclic_reduction", cyc.str()},
              {"long", long_word},
              {"balanced", bal ? balanced_json(*bal) : ordered_json(nullptr)},
              {"tau", bal ? ordered_json(tau(*bal)) : ordered_json(nullptr)},
              {"eta", eta(w)},
              {"norm_bounds", {{"lower", nb.lower}, {"upper", nb.upper}}}};
  rep.csv_header = {"word", "reduced", "cyclic_reduction", "long", "balanced", "r", "tau", "eta", "norm_lower",
                    "norm_upper"};
  rep.csv_rows.push_back({config.word, w.str(), cyc.str(), long_word ? "true" : "false", bal ? bal->str() : "",
                          bal ? std::to_string(bal->r()) : "", bal ? std::to_string(tau(*bal)) : "",
                          std::to_string(eta(w)), std::to_string(nb.lower), std::to_string(nb.upper)});
  return rep;
}

// ------------------------------------------------------------ fixed-points

Report cmd_fixed_points(const RunConfig& config) {
  const FreeWord w = parse_nontrivial(config.word);
  const BalancedWord bal = require_long(w);
  const std::int64_t k_min = minimal_valid_k(bal, config.L, config.delta);
  const std::vector<std::int64_t> ks = k_grid(config, k_min);
  for (std::int64_t k : ks)
    if (k < k_min)
      throw Error(ErrorKind::KTooSmall, "k = " + std::to_string(k) + " is below k_min = " + std::to_string(k_min) +
                                            " for " + bal.str() + " under delta " + config.delta.str() +
                                            "; suggested k_min = " + std::to_string(k_min));

  Report rep;
  rep.title = "fixed-points " + bal.str() + "  (L = " + format(config.L) + ", delta " + config.delta.str() + ")";
  rep.csv_header = {"word", "k", "epsilon", "cz_index", "action_leading", "action_relative_to_top", "valid"};
  ordered_json runs = ordered_json::array();
  const std::size_t expected = std::size_t{1} << (2 * bal.r());
  for (std::int64_t k : ks) {
    const ModelParams params = config.delta.params(config.L, k);
    const auto records = solve_all(bal, params);
    const FixedPointRecord& top = find_record(records, SignVector::top(bal));
    ordered_json rows = ordered_json::array();
    std::size_t valid = 0;
    for (const auto& rec : records) {
      const bool ok = rec.valid();
      valid += ok;
      const HalfInt cz = cz_index(rec, bal);
      const Rational lead = action_leading(rec, bal, params);
      std::optional<Rational> rel;
      if (ok && top.valid()) rel = action_exact_relative(rec, top, bal, params);
      rows.push_back({{"epsilon", rec.eps.str()},
                      {"z0", {{"x", format(rec.z0().x)}, {"y", format(rec.z0().y)}}},
                      {"valid", ok},
                      {"flags",
                       {{"closure", rec.flags.closure},
                        {"signs", rec.flags.signs},
                        {"windows", rec.flags.windows},
                        {"inside_square", rec.flags.inside_square},
                        {"outside_smoothing", rec.flags.outside_smoothing}}},
                      {"det_Abar_minus_one", format(rec.det_Abar_minus_one)},
                      {"cz_index", format(cz)},
                      {"action_leading", format(lead)},
                      {"action_relative_to_top", opt_rational(rel)}});
      rep.csv_rows.push_back({bal.str(), std::to_string(k), rec.eps.str(), format(cz), format(lead), opt_cell(rel),
                              ok ? "true" : "false"});
    }
    if (valid != expected) {
      rep.invariants_ok = false;
      rep.warnings.push_back("k = " + std::to_string(k) + ": " + std::to_string(valid) + " of " +
                             std::to_string(expected) + " records are valid");
    }
    runs.push_back({{"k", k}, {"delta", format(params.delta)}, {"valid_records", valid}, {"records", rows}});
  }
  rep.json = {{"schema", schema_id("fixed-points")},
              {"word", config.word},
              {"balanced", balanced_json(bal)},
              {"L", format(config.L)},
              {"delta_policy", config.delta.str()},
              {"k_min", k_min},
              {"runs", runs}};
  rep.summary.push_back("k_min = " + std::to_string(k_min));
  return rep;
}

// ------------------------------------------------------------ growth-scan

Report cmd_growth_scan(const RunConfig& config) {
  const FreeWord w = parse_nontrivial(config.word);
  const auto bal = to_balanced(w);
  const std::int64_t k_min_word = bal ? minimal_valid_k(*bal, config.L, config.delta) : 1;
  ScanOptions opts;
  opts.L = config.L;
  opts.policy = config.delta;
  opts.total_area = config.total_area;
  const GrowthScan scan = growth_scan(w, k_grid(config, k_min_word), opts);

  Report rep;
  rep.title = "growth-scan " + w.str() + "  (" + scan.branch + " branch, L = " + format(config.L) + ")";
  rep.csv_header = {"word", "branch", "k", "valid", "bound", "action_gap", "c_minus", "c_plus"};
  ordered_json rows = ordered_json::array();
  bool nondecreasing = true;
  bool gap_exceeds = true;
  std::optional<Rational> prev;
  std::vector<std::pair<std::int64_t, Rational>> gaps;
  for (const auto& row : scan.rows) {
    rows.push_back({{"k", row.k},
                    {"valid", row.valid},
                    {"bound", row.valid ? ordered_json(format(row.bound)) : ordered_json(nullptr)},
                    {"action_gap", opt_rational(row.action_gap)},
                    {"c_minus", opt_rational(row.c_minus)},
                    {"c_plus", opt_rational(row.c_plus)}});
    rep.csv_rows.push_back({w.str(), scan.branch, std::to_string(row.k), row.valid ? "true" : "false",
                            row.valid ? format(row.bound) : "", opt_cell(row.action_gap), opt_cell(row.c_minus),
                            opt_cell(row.c_plus)});
    if (!row.valid) continue;
    if (prev && row.bound < *prev) nondecreasing = false;
    prev = row.bound;
    if (row.action_gap) {
      if (!(*row.action_gap > row.bound)) gap_exceeds = false;
      gaps.emplace_back(row.k, *row.action_gap);
    }
  }

  // gap / k over the last decade of the grid must settle within 5%.
  std::optional<bool> gap_slope_settled;
  std::optional<Rational> gap_slope;
  if (gaps.size() >= 2) {
    const std::int64_t k_last = gaps.back().first;
    Rational lo, hi;
    bool first = true;
    for (const auto& [k, g] : gaps) {
      if (10 * k < k_last) continue;
      const Rational s = g / k;
      if (first || s < lo) lo = s;
      if (first || s > hi) hi = s;
      first = false;
    }
    gap_slope = gaps.back().second / k_last;
    gap_slope_settled = hi - lo <= abs(*gap_slope) / 20;
  }

  const bool slope_positive = scan.fitted_slope > 0;
  const bool slope_exact = scan.branch != "long" || scan.fitted_slope == scan.theoretical_slope;
  rep.invariants_ok = slope_positive && slope_exact && nondecreasing && gap_exceeds && gap_slope_settled.value_or(true);

  ordered_json checks = {{"slope_positive", slope_positive},
                         {"slope_matches_theory", slope_exact},
                         {"bounds_nondecreasing", nondecreasing},
                         {"gap_exceeds_bound", gap_exceeds},
                         {"gap_slope_settled", gap_slope_settled ? ordered_json(*gap_slope_settled) : ordered_json(nullptr)}};
  ordered_json summary = {{"k_min", scan.k_min},
                          {"fitted_slope", format(scan.fitted_slope)},
                          {"fitted_slope_decimal", decimal12(scan.fitted_slope)},
                          {"theoretical_slope", format(scan.theoretical_slope)},
                          {"gap_slope", opt_rational(gap_slope)},
                          {"checks", checks}};
  if (scan.branch == "long") {
    summary["constant"] = "L/4 tau(w): lower-bound witness from the boundary depth, not an optimal constant";
  } else {
    summary["total_area"] = format(config.total_area.value_or(default_total_area(config.L)));
    summary["derivation"] =
        "spectrum of the autonomous flow is {k min H, k max H}; c_+ > c_- forces c_+ = k max H and "
        "c_- = k min H, so the Hofer norm is at least (c_+ - c_-)/2";
  }
  rep.json = {{"schema", schema_id("growth-scan")},
              {"word", config.word},
              {"reduced", w.str()},
              {"branch", scan.branch},
              {"L", format(config.L)},
              {"delta_policy", config.delta.str()},
              {"rows", rows},
              {"summary", summary}};
  rep.summary = {"k_min = " + std::to_string(scan.k_min),
                 "fitted slope = " + format(scan.fitted_slope) + " (" + decimal12(scan.fitted_slope) + ")",
                 "theoretical slope = " + format(scan.theoretical_slope)};
  if (gap_slope) rep.summary.push_back("action gap / k at the last k = " + format(*gap_slope));
  return rep;
}

// ------------------------------------------------------------ oracle-check

namespace {

struct SuiteResult {
  std::string suite;
  std::string word;
  std::optional<std::int64_t> k;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

void check_long_word(const BalancedWord& bal, const RunConfig& config, bool& fault_pending,
                     std::vector<SuiteResult>& out) {
  const std::int64_t k_min = minimal_valid_k(bal, config.L, config.delta);
  const std::size_t expected = std::size_t{1} << (2 * bal.r());
  for (std::int64_t k = k_min; k <= 4 * k_min; ++k) {
    const ModelParams params = config.delta.params(config.L, k);
    SuiteResult fwd{"forward_iteration", bal.str(), k, 0, {}};
    SuiteResult rs{"rs_crossing", bal.str(), k, 0, {}};
    SuiteResult corr{"concatenation", bal.str(), k, 0, {}};
    auto records = solve_all(bal, params);
    if (fault_pending) {
      records.front().points.front().x += Rational(1, 1000);
      fault_pending = false;
    }
    std::size_t valid = 0;
    for (const auto& rec : records) valid += rec.valid();
    ++fwd.checks;
    if (valid != expected)
      fwd.failures.push_back(std::to_string(valid) + " of " + std::to_string(expected) + " records valid");
    for (const auto& rec : records) {
      const std::string tag = rec.eps.str() + ": ";
      ++fwd.checks;
      const auto fc = oracles::check_record(rec, bal, params);
      if (!fc.ok())
        fwd.failures.push_back(tag + (fc.error ? *fc.error
                                               : std::string("closure ") + (fc.closure ? "ok" : "broken") +
                                                     ", intermediates " + (fc.intermediates_match ? "ok" : "differ") +
                                                     ", class " + (fc.class_matches ? "ok" : "differs")));
      const Sp2Path path = linearized_path(rec, bal, params);
      ++rs.checks;
      try {
        const HalfInt formula = cz_index(rec, bal);
        const HalfInt numeric = cz_index_numeric(path);
        if (formula != numeric) rs.failures.push_back(tag + "formula " + format(formula) + ", oracle " + format(numeric));
      } catch (const Error& e) {
        rs.failures.push_back(tag + e.what());
      }
      for (const auto& jc : joint_corrections(rec, bal, params)) {
        ++corr.checks;
        if (jc.correction.value != HalfInt::integer(0))
          corr.failures.push_back(tag + jc.kind + std::to_string(jc.index) + " = " + format(jc.correction.value));
      }
    }
    out.push_back(std::move(fwd));
    out.push_back(std::move(rs));
    out.push_back(std::move(corr));
  }
}

}  // namespace

Report cmd_oracle_check(const RunConfig& config) {
  const std::vector<std::string> corpus = config.corpus ? read_corpus(*config.corpus) : default_corpus();
  Report rep;
  rep.title = "oracle-check";
  if (corpus.empty()) rep.warnings.push_back("NoWork: the corpus is empty");

  std::vector<SuiteResult> results;
  {
    const auto wo = oracles::run_word_oracle(6);
    results.push_back({"word_algebra", "", std::nullopt, wo.checks, wo.failures});
  }
  bool fault_pending = config.inject_fault;
  for (const std::string& literal : corpus) {
    SuiteResult setup{"setup", literal, std::nullopt, 1, {}};
    try {
      const FreeWord w = parse_nontrivial(literal);
      if (const auto bal = to_balanced(w)) {
        check_long_word(*bal, config, fault_pending, results);
      } else {
        // Powers have no hyperbolic fixed points; check the spectral bound instead.
        const PowerBound pb = power_word_bound(w, 1, config.L, config.total_area.value_or(default_total_area(config.L)));
        if (!(pb.bound > 0)) setup.failures.push_back("power bound is not positive");
        results.push_back(std::move(setup));
      }
    } catch (const Error& e) {
      setup.failures.push_back(e.what());
      results.push_back(std::move(setup));
    }
  }
  if (fault_pending) rep.warnings.push_back("inject-fault requested but no record was available to corrupt");

  rep.csv_header = {"suite", "word", "k", "checks", "failures", "passed"};
  ordered_json suites = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& s : results) {
    const bool passed = s.failures.empty();
    failed += !passed;
    suites.push_back({{"suite", s.suite},
                      {"word", s.word.empty() ? ordered_json(nullptr) : ordered_json(s.word)},
                      {"k", s.k ? ordered_json(*s.k) : ordered_json(nullptr)},
                      {"checks", s.checks},
                      {"failures", s.failures.size()},
                      {"passed", passed},
                      {"messages", s.failures}});
    rep.csv_rows.push_back({s.suite, s.word, s.k ? std::to_string(*s.k) : "", std::to_string(s.checks),
                            std::to_string(s.failures.size()), passed ? "true" : "false"});
    for (const auto& f : s.failures) rep.summary.push_back("FAIL " + s.suite + " " + s.word + ": " + f);
  }
  rep.invariants_ok = failed == 0;
  rep.json = {{"schema", schema_id("oracle-check")},
              {"corpus", corpus},
              {"delta_policy", config.delta.str()},
              {"L", format(config.L)},
              {"warnings", rep.warnings},
              {"suites", suites},
              {"passed", rep.invariants_ok}};
  rep.summary.push_back(std::to_string(results.size() - failed) + " of " + std::to_string(results.size()) +
                        " suites passed");
  return rep;
}

// ------------------------------------------------------------ rendering

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_table(const Report& rep) {
  std::vector<std::size_t> width(rep.csv_header.size(), 0);
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = rep.csv_header[c].size();
  for (const auto& row : rep.csv_rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  if (!rep.title.empty()) os << rep.title << "\n\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(rep.csv_header);
  std::vector<std::string> rule;
  for (std::size_t wdt : width) rule.push_back(std::string(wdt, '-'));
  line(rule);
  for (const auto& row : rep.csv_rows) line(row);
  if (!rep.summary.empty()) os << '\n';
  for (const auto& s : rep.summary) os << s << '\n';
  return os.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report.json.dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream os;
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
        os << '\n';
      };
      line(report.csv_header);
      for (const auto& row : report.csv_rows) line(row);
      return os.str();
    }
    case OutputFormat::Table: return render_table(report);
  }
  return {};
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze-word", "fixed-points", "growth-scan", "oracle-check"};
  return names;
}

int run_command(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    Report rep;
    if (name == "analyze-word") rep = cmd_analyze_word(config);
    else if (name == "fixed-points") rep = cmd_fixed_points(config);
    else if (name == "growth-scan") rep = cmd_growth_scan(config);
    else if (name == "oracle-check") rep = cmd_oracle_check(config);
    else throw UsageError("unknown command '" + name + "'");

    const std::string text = render(rep, config.format);
    if (config.out) {
      std::ofstream file(*config.out);
      if (!file) throw UsageError("cannot write '" + *config.out + "'");
      file << text;
    } else {
      out << text;
    }
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    if (!rep.invariants_ok) {
      err << "error: invariant check failed\n";
      return 3;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (position " << e.position() << ")" << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace eggbeater::cli
