#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "eggbeater/cli/commands.hpp"

using namespace eggbeater;

int main(int argc, char** argv) {
  CLI::App app{"Egg-beater words: fixed points, Floer indices and Hofer growth bounds"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string L, delta, format_name = "table", total_area;
  std::int64_t k = 0, k_min = 0, k_max = 0;

  const std::map<std::string, std::string> blurbs{
      {"analyze-word", "normal form and invariants of a word"},
      {"fixed-points", "all fixed points of the egg-beater map for one or more k"},
      {"growth-scan", "Hofer-norm lower bounds and action gaps over a k grid"},
      {"oracle-check", "compare the closed formulas against independent references"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const std::string& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    if (name != "oracle-check") sub->add_option("--word", config.word, "word literal, e.g. \"H^2 V^3 H^-1 V\"")->required();
    sub->add_option("--L", L, "annulus length (rational, > 4), default 5");
    sub->add_option("--k", k, "single k");
    sub->add_option("--k-min", k_min, "first k of the geometric grid");
    sub->add_option("--k-max", k_max, "last k of the geometric grid");
    sub->add_option("--k-factor", config.k_factor, "grid ratio, default 2");
    sub->add_option("--delta", delta, "smoothing width: 0, 1/k (default) or p/q");
    sub->add_option("--format", format_name, "json, csv or table (default)");
    sub->add_option("--out", config.out, "write the report to PATH");
    sub->add_option("--corpus", config.corpus, "word list, one literal per line, '#' comments");
    sub->add_option("--total-area", total_area, "area of the closed surface used to normalize power-word Hamiltonians");
    if (name == "oracle-check") sub->add_flag("--inject-fault", config.inject_fault, "corrupt one record (test mode)");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; everything else is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    if (!L.empty()) config.L = parse_rational(L);
    if (!delta.empty()) config.delta = DeltaPolicy::parse(delta);
    if (!total_area.empty()) config.total_area = parse_rational(total_area);
    config.format = cli::parse_format(format_name);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
  if (subs[command]->count("--k")) config.k = k;
  if (subs[command]->count("--k-min")) config.k_min = k_min;
  if (subs[command]->count("--k-max")) config.k_max = k_max;

  return cli::run_command(command, config, std::cout, std::cerr);
}
