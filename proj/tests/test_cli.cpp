#include <stdexcept>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "writers.hpp"

using namespace ifam;
using namespace ifam::cli;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(const std::string& name) {
  RunConfig cfg;
  cfg.command = name;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("decode prints the transition list") {
  RunConfig cfg = command("decode");
  cfg.rule = 54;
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{1,1} -> {1,0}\n"
        "{1,0} -> {2,1}\n"
        "{2,1} -> {1,1}\n"
        "{2,0} -> {2,0}\n");
}

TEST_CASE("period reports one machine-parseable line") {
  RunConfig cfg = command("period");
  cfg.rule = 54;
  cfg.window = 5;
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "period=21 transient=0 class=Complex max=32\n");
  CHECK(r.err.empty());
}

TEST_CASE("small windows earn an advisory on the diagnostic stream") {
  RunConfig cfg = command("period");
  cfg.rule = 54;
  cfg.window = 3;
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("advisory") != std::string::npos);
}

TEST_CASE("catalog CSV carries the fixed header and a trailing newline") {
  const RunResult r = [] {
    RunConfig cfg = command("table1");
    cfg.rule = 54;
    cfg.window_min = 5;
    cfg.window_max = 6;
    return run(cfg);
  }();
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "s,k,w,rule,period,transient,class,pct_of_max\n"
        "2,2,5,54,21,0,Complex,0.65625\n"
        "2,2,6,54,63,0,Complex,0.984375\n");
}

TEST_CASE("an empty catalog is a bare header") {
  std::ostringstream out;
  const std::size_t bytes =
      write_catalog({}, OutputFormat::Csv, out);
  CHECK(out.str() == "s,k,w,rule,period,transient,class,pct_of_max\n");
  CHECK(bytes == out.str().size());
}

TEST_CASE("catalog JSON round-trips the rows") {
  const auto rows = scan_windows(54, 2, 2, 5, 9);
  std::ostringstream out;
  const std::size_t bytes = write_catalog(rows, OutputFormat::Json, out);
  CHECK(bytes == out.str().size());
  CHECK(out.str().back() == '\n');

  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(doc[i]["s"].get<int>() == rows[i].state_count);
    CHECK(doc[i]["k"].get<int>() == rows[i].symbol_count);
    CHECK(doc[i]["w"].get<int>() == rows[i].window);
    CHECK(doc[i]["rule"].get<std::uint64_t>() == rows[i].rule);
    CHECK(doc[i]["period"].get<std::uint64_t>() == rows[i].period);
    CHECK(doc[i]["transient"].get<std::uint64_t>() == rows[i].transient);
    CHECK(doc[i]["class"].get<std::string>() == to_string(rows[i].complexity));
    CHECK(doc[i]["pct_of_max"].get<double>() == rows[i].pct_of_max);
  }
}

TEST_CASE("CSV doubles re-parse to the exact value") {
  const auto rows = scan_rules(2, 2, 5);
  std::ostringstream out;
  write_catalog(rows, OutputFormat::Csv, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  for (const RuleCatalogRow& row : rows) {
    REQUIRE(std::getline(in, line));
    const auto last_comma = line.rfind(',');
    const double parsed = std::strtod(line.c_str() + last_comma + 1, nullptr);
    REQUIRE(parsed == row.pct_of_max);
  }
}

TEST_CASE("format_double is lossless for awkward values") {
  for (double v : {1.0 / 3.0, 0.1, 6.0 / 131072.0, -1.7000120994513972}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("identical configs write identical bytes") {
  RunConfig scan_cfg = command("scan");
  scan_cfg.state_count = 2;
  scan_cfg.symbol_count = 2;
  scan_cfg.window = 6;
  const RunResult first = run(scan_cfg);
  const RunResult second = run(scan_cfg);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());

  RunConfig t2 = command("table2");
  t2.window = 10;
  t2.total_ticks = 1 << 10;
  t2.day_lengths = {32, 64};
  CHECK(run(t2).out == run(t2).out);

  RunConfig sim = command("simulate");
  sim.baseline = true;
  sim.seed = 9;
  sim.ticks = 500;
  CHECK(run(sim).out == run(sim).out);
}

TEST_CASE("scan summarizes on the diagnostic stream") {
  RunConfig cfg = command("scan");
  cfg.window = 6;
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("complex_rules=54,201") != std::string::npos);
  CHECK(r.err.find("dedup_complex=1") != std::string::npos);
}

TEST_CASE("simulate emits tick rows") {
  RunConfig cfg = command("simulate");
  cfg.rule = 54;
  cfg.window = 3;
  cfg.ticks = 3;
  const RunResult r = run(cfg);
  CHECK(r.out ==
        "tick,movement,change,price\n"
        "1,0,-1,-1\n"
        "2,0,-1,-2\n"
        "3,1,1,-1\n");
}

TEST_CASE("series JSON mirrors the CSV columns") {
  RunConfig cfg = command("simulate");
  cfg.rule = 54;
  cfg.window = 3;
  cfg.ticks = 2;
  cfg.format = OutputFormat::Json;
  const RunResult r = run(cfg);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["tick"] == 1);
  CHECK(doc[0]["movement"] == 0);
  CHECK(doc[0]["change"] == -1);
  CHECK(doc[0]["price"] == -1);
}

TEST_CASE("graph exports one edge per word") {
  RunConfig cfg = command("graph");
  cfg.rule = 85;
  cfg.window = 3;
  const RunResult r = run(cfg);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "from_word,to_word,emitted_symbol");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("the output path option writes the same bytes to a file") {
  namespace fs = std::filesystem;
  const fs::path path =
      fs::temp_directory_path() / "ifam_test_catalog.csv";

  RunConfig cfg = command("table1");
  cfg.rule = 54;
  cfg.window_min = 5;
  cfg.window_max = 7;
  const RunResult direct = run(cfg);

  cfg.output_path = path.string();
  const RunResult file_run = run(cfg);
  CHECK(file_run.exit_code == 0);
  CHECK(file_run.out.empty());

  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  fs::remove(path);
}

TEST_CASE("unwritable paths are runtime errors") {
  RunConfig cfg = command("decode");
  cfg.output_path = "/nonexistent-dir/out.csv";
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("history strings parse oldest-first") {
  const HistoryWord w = parse_history("DUU", 3, 2);
  CHECK(w.movements == std::vector<Symbol>{1, 1, 0});

  const HistoryWord digits = parse_history("0123", 4, 4);
  CHECK(digits.movements == std::vector<Symbol>{3, 2, 1, 0});

  CHECK(parse_history("012", 3, 3).movements == std::vector<Symbol>{2, 1, 0});
  CHECK_THROWS_AS(parse_history("UUX", 3, 2), UsageError);
  CHECK_THROWS_AS(parse_history("UU", 3, 2), UsageError);
  CHECK_THROWS_AS(parse_history("024", 3, 4), UsageError);
  CHECK_THROWS_AS(parse_history("UUU", 3, 3), UsageError);  // k=3 wants digits
}

TEST_CASE("window ranges parse as N or N..M") {
  CHECK(parse_window_range("5..22") == std::pair{5, 22});
  CHECK(parse_window_range("7") == std::pair{7, 7});
  CHECK_THROWS_AS(parse_window_range("abc"), UsageError);
  CHECK_THROWS_AS(parse_window_range("9..2"), UsageError);
  CHECK_THROWS_AS(parse_window_range("0..4"), UsageError);
}

TEST_CASE("default day lengths double from 32 to 131072") {
  const auto lengths = default_day_lengths();
  REQUIRE(lengths.size() == 13);
  CHECK(lengths.front() == 32);
  CHECK(lengths.back() == 131'072);
}

TEST_CASE("usage and runtime failures map to exit codes 2 and 1") {
  RunConfig bad_init = command("period");
  bad_init.window = 5;
  bad_init.init = "UU";
  const RunResult usage = run(bad_init);
  CHECK(usage.exit_code == 2);
  CHECK(usage.err.find("usage error:") == 0);

  RunConfig guarded = command("period");
  guarded.window = 40;
  const RunResult runtime = run(guarded);
  CHECK(runtime.exit_code == 1);
  CHECK(runtime.err.find("error:") == 0);

  const RunResult unknown = run(command("frobnicate"));
  CHECK(unknown.exit_code == 2);
}

#ifdef IFAM_BINARY
TEST_CASE("the installed binary honors the exit-code contract") {
  auto exit_code = [](const std::string& args) {
    const std::string cmd =
        std::string(IFAM_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };
  CHECK(exit_code("period --rule 54 --w 5") == 0);
  CHECK(exit_code("period --rule 54 --w 40") == 1);
  CHECK(exit_code("period --no-such-flag") == 2);
  CHECK(exit_code("frobnicate") == 2);
  CHECK(exit_code("--help") == 0);
}
#endif

TEST_SUITE_END();
