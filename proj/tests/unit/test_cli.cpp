#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eggbeater/cli/commands.hpp"

using namespace eggbeater;
using namespace eggbeater::cli;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& name, const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run_command(name, cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig word(const std::string& w, OutputFormat f = OutputFormat::Json) {
  RunConfig c;
  c.word = w;
  c.format = f;
  return c;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST_CASE("corpus files") {
  CHECK(parse_corpus("# header\nH V\n\n  H^2 V   # trailing\n#only\n") == std::vector<std::string>{"H V", "H^2 V"});
  CHECK(parse_corpus("").empty());
  CHECK(default_corpus().size() == 6);
  CHECK_THROWS_AS(read_corpus("/nonexistent/corpus.txt"), UsageError);
}

TEST_CASE("config validation and grids") {
  RunConfig c;
  c.k = 3;
  c.k_min = 2;
  CHECK_THROWS_AS(c.validate(), UsageError);
  RunConfig d;
  d.L = 4;
  CHECK_THROWS_AS(d.validate(), UsageError);
  RunConfig e;
  CHECK(k_grid(e, 5) == std::vector<std::int64_t>{5, 10, 20, 40, 80, 160, 320});
  e.k_max = 40;
  e.k_factor = 4;
  CHECK(k_grid(e, 5) == std::vector<std::int64_t>{5, 20});
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("analyze-word") {
  const Run r = run("analyze-word", word("H V H^-1 V^-1"));
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "eggbeater/analyze-word/v1");
  CHECK(j["long"] == true);
  CHECK(j["eta"] == 0);
  CHECK(j["tau"] == 1);
  CHECK(nlohmann::json::parse(run("analyze-word", word("V^3")).out)["long"] == false);

  const Run empty = run("analyze-word", word(""));
  CHECK(empty.code == 2);
  CHECK(empty.err.find("TrivialWord") != std::string::npos);
  const Run bad = run("analyze-word", word("H^2 Q"));
  CHECK(bad.code == 1);
  CHECK(bad.err.find("position 4") != std::string::npos);
}

TEST_CASE("fixed-points") {
  RunConfig c = word("H V");
  c.k = 50;
  const Run r = run("fixed-points", c);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& recs = j["runs"][0]["records"];
  REQUIRE(recs.size() == 4);
  std::vector<std::string> idx;
  for (const auto& rec : recs) idx.push_back(rec["cz_index"]);
  CHECK(idx == std::vector<std::string>{"2", "1", "1", "0"});

  c.format = OutputFormat::Csv;
  const Run csv = run("fixed-points", c);
  CHECK(lines(csv.out) == 5);
  CHECK(csv.out.rfind("word,k,epsilon,cz_index,action_leading,action_relative_to_top,valid\n", 0) == 0);

  c.k = 2;
  const Run low = run("fixed-points", c);
  CHECK(low.code == 2);
  CHECK(low.err.find("KTooSmall") != std::string::npos);
  CHECK(low.err.find("suggested k_min = 5") != std::string::npos);

  CHECK(run("fixed-points", word("V^2")).code == 2);
}

TEST_CASE("growth-scan") {
  const Run r = run("growth-scan", word("H V"));
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["fitted_slope"] == "5/4");
  CHECK(j["summary"]["fitted_slope_decimal"] == "1.25");
  CHECK(j["rows"].size() == 7);

  const auto comm = nlohmann::json::parse(run("growth-scan", word("H V H^-1 V^-1")).out);
  CHECK(comm["summary"]["checks"]["slope_positive"] == true);

  const Run v2 = run("growth-scan", word("V^2", OutputFormat::Csv));
  CHECK(v2.code == 0);
  CHECK(v2.out.find(",power,") != std::string::npos);

  CHECK(run("growth-scan", word("")).code == 2);
}

TEST_CASE("oracle-check") {
  RunConfig c;
  c.format = OutputFormat::Csv;
  const Run ok = run("oracle-check", c);
  CHECK(ok.code == 0);
  CHECK(ok.out.find(",false\n") == std::string::npos);

  c.inject_fault = true;
  const Run bad = run("oracle-check", c);
  CHECK(bad.code == 3);
  CHECK(bad.out.find("forward_iteration,H V,5,5,1,false") != std::string::npos);

  const std::string path = "oracle_check_empty_corpus.txt";
  std::ofstream(path) << "# nothing here\n";
  RunConfig e;
  e.corpus = path;
  const Run empty = run("oracle-check", e);
  std::remove(path.c_str());
  CHECK(empty.code == 0);
  CHECK(empty.err.find("NoWork") != std::string::npos);
}

TEST_CASE("output is deterministic and can go to a file") {
  RunConfig c = word("H^2 V^3 H^-1 V");
  c.k_min = 7;
  c.k_max = 14;
  CHECK(run("fixed-points", c).out == run("fixed-points", c).out);

  const std::string path = "cli_test_output.json";
  c.out = path;
  const Run r = run("fixed-points", c);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(path.c_str());
  c.out.reset();
  CHECK(buf.str() == run("fixed-points", c).out);
  CHECK(run("no-such-command", c).code == 1);
}
