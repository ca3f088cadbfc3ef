#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "alertrank/cli.hpp"
#include "alertrank/ingest.hpp"
#include "alertrank/miner.hpp"
#include "alertrank/scorer.hpp"
#include "alertrank/synth.hpp"
#include "helpers.hpp"

using namespace alertrank;
using alertrank::testing::data_path;

namespace {

namespace fs = std::filesystem;

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"alertrank"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

fs::path temp_file(const std::string& tag) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("alertrank_test_" + tag + "_" + std::to_string(++counter));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& tag) : path(temp_file(tag)) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("rank on the toy log file orders by the mined positional patterns") {
  TempFile out("rank_toy");
  const std::string fixture = data_path("toy.log").string();
  REQUIRE(run_cli({"rank", fixture, "--min-support", "50%", "--score", "simple",
                   "--out", out.path.string()}) == cli::exit_ok);

  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 4);  // header + 3 alerts
  CHECK(lines[0] == "# n=3 score=simple min_support=50% p=1");

  // Parsed positionally, only (0,"1") and (1,"3") are frequent, so the
  // counts are t0=2, t1=1, t2=1 and the tie puts tid 1 first.
  CHECK(lines[1] == "1\t1\t1\t2 3 5");
  CHECK(lines[2] == "2\t1\t2\t1 2 3 5");
  CHECK(lines[3] == "3\t2\t0\t1 3 4");

  // cross-check the frozen expectation against the reference miner + scorer
  const Dataset ds = parse_log_file(data_path("toy.log"));
  const auto fps = brute_force_mine(ds, {MinSupport::parse("50%"), {}});
  CHECK(simple_fpof(ds.transaction(0), fps) == 2);
  CHECK(simple_fpof(ds.transaction(1), fps) == 1);
  CHECK(simple_fpof(ds.transaction(2), fps) == 1);
}

TEST_CASE("rank on the snort sample log puts the 8:59AM robots alert first") {
  TempFile out("rank_fig1");
  REQUIRE(run_cli({"rank", data_path("snort_sample.log").string(), "--min-support", "2",
                   "--score", "simple", "--out", out.path.string()}) == cli::exit_ok);
  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 4);
  CHECK(lines[1] ==
        "1\t127\t2\t7 3 508 WEB-MISC/robots.txt/access 25 2 8/11/2010 8:59AM "
        "3632363313 2148203229 6 34,075 80");
}

TEST_CASE("rank exit codes") {
  TempFile empty("empty_input");
  { std::ofstream touch(empty.path); }
  CHECK(run_cli({"rank", empty.path.string(), "--min-support", "2"}) ==
        cli::exit_degenerate);

  CHECK(run_cli({"rank", "/nonexistent/alerts.log", "--min-support", "2"}) ==
        cli::exit_io);

  const std::string fixture = data_path("toy.log").string();
  CHECK(run_cli({"rank", fixture, "--min-support", "0%"}) == cli::exit_config);
  CHECK(run_cli({"rank", fixture, "--min-support", "150%"}) == cli::exit_config);
  CHECK(run_cli({"rank", fixture, "--min-support", "junk"}) == cli::exit_config);
  CHECK(run_cli({"rank", fixture}) == cli::exit_config);  // --min-support required
  CHECK(run_cli({"rank", fixture, "--min-support", "2", "--score", "bogus"}) ==
        cli::exit_config);
  CHECK(run_cli({"rank", fixture, "--min-support", "2", "--top-percent", "0"}) ==
        cli::exit_config);
  CHECK(run_cli({"rank", fixture, "--min-support", "2", "--max-pattern-len", "0"}) ==
        cli::exit_config);
  CHECK(run_cli({"bogus-command"}) == cli::exit_config);
}

TEST_CASE("fully ignored lines make the input degenerate") {
  CHECK(run_cli({"rank", data_path("toy.log").string(), "--min-support", "2",
                 "--ignore-fields", "0,1,2,3"}) == cli::exit_degenerate);
}

TEST_CASE("mine dump on the snort sample at support 3") {
  TempFile out("mine_fig1");
  REQUIRE(run_cli({"mine", data_path("snort_sample.log").string(), "--min-support", "3",
                   "--out", out.path.string()}) == cli::exit_ok);
  const auto lines = lines_of(slurp(out.path));
  CHECK(lines.size() == 63);
  bool found_template = false;
  for (const auto& line : lines)
    if (line == "3\t0,1,2\t0=7 2=508 4=25 5=2 10=6 12=80") found_template = true;
  CHECK(found_template);
}

TEST_CASE("mine dump on the toy log lists the two frequent positional items") {
  TempFile out("mine_toy");
  REQUIRE(run_cli({"mine", data_path("toy.log").string(), "--min-support", "2",
                   "--out", out.path.string()}) == cli::exit_ok);
  // parsed positionally, "3" at field 1 and "3" at field 2 are distinct items
  CHECK(slurp(out.path) ==
        "2\t0,2\t0=1\n"
        "2\t0,1\t1=3\n");
}

TEST_CASE("mine with unreachable support writes an empty dump and exits 0") {
  TempFile out("mine_empty");
  REQUIRE(run_cli({"mine", data_path("toy.log").string(), "--min-support", "4",
                   "--out", out.path.string()}) == cli::exit_ok);
  CHECK(slurp(out.path).empty());
}

TEST_CASE("failed runs leave no output file behind") {
  TempFile out("no_partial");
  CHECK(run_cli({"rank", "/nonexistent/alerts.log", "--min-support", "2", "--out",
                 out.path.string()}) == cli::exit_io);
  CHECK_FALSE(fs::exists(out.path));

  TempFile empty("empty_for_out");
  { std::ofstream touch(empty.path); }
  CHECK(run_cli({"rank", empty.path.string(), "--min-support", "2", "--out",
                 out.path.string()}) == cli::exit_degenerate);
  CHECK_FALSE(fs::exists(out.path));
}

TEST_CASE("reruns are byte-identical") {
  TempFile out1("idem1"), out2("idem2");
  const std::vector<std::string> args{"rank", data_path("snort_sample.log").string(),
                                      "--min-support", "2", "--score", "fpof"};
  auto with_out = [&](const fs::path& p) {
    auto a = args;
    a.push_back("--out");
    a.push_back(p.string());
    return a;
  };
  REQUIRE(run_cli(with_out(out1.path)) == cli::exit_ok);
  REQUIRE(run_cli(with_out(out2.path)) == cli::exit_ok);
  CHECK(slurp(out1.path) == slurp(out2.path));
}

TEST_CASE("eval sweeps a synthetic log deterministically") {
  TempFile out1("eval1"), out2("eval2");
  const std::vector<std::string> base{
      "eval", "--n-routine", "80",  "--n-attacks", "5",   "--seed", "9",
      "--supports", "2,3", "--score", "simple"};
  auto with_out = [&](const fs::path& p) {
    auto a = base;
    a.push_back("--out");
    a.push_back(p.string());
    return a;
  };
  REQUIRE(run_cli(with_out(out1.path)) == cli::exit_ok);
  REQUIRE(run_cli(with_out(out2.path)) == cli::exit_ok);

  const std::string text = slurp(out1.path);
  CHECK(text == slurp(out2.path));
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 3);  // header + 2 rows
  CHECK(lines[0] == "# min_support\tpattern_count\tworst_attack_rank\treduction_pct");
  CHECK(lines[1].starts_with("2\t"));
  CHECK(lines[2].starts_with("3\t"));
}

TEST_CASE("eval accepts an explicit log plus ground-truth attack tids") {
  SyntheticSpec spec = desk_scale_spec();
  spec.n_routine = 60;
  spec.n_attacks = 3;
  spec.seed = 17;
  const SyntheticLog log = generate_log(spec);

  TempFile log_file("eval_log"), tid_file("eval_tids"), out("eval_out");
  {
    std::ofstream lf(log_file.path, std::ios::binary);
    for (const Transaction& t : log.dataset.transactions()) lf << t.raw << "\n";
    std::ofstream tf(tid_file.path, std::ios::binary);
    for (Tid t : log.attack_tids) tf << t << "\n";
  }

  REQUIRE(run_cli({"eval", log_file.path.string(), "--attack-tids",
                   tid_file.path.string(), "--supports", "2", "--score", "simple",
                   "--out", out.path.string()}) == cli::exit_ok);
  const auto lines = lines_of(slurp(out.path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].starts_with("2\t"));

  // missing tid file is a config error; so is an out-of-range tid
  CHECK(run_cli({"eval", log_file.path.string(), "--supports", "2"}) ==
        cli::exit_config);
  TempFile bad_tids("eval_bad_tids");
  { std::ofstream tf(bad_tids.path); tf << "99999\n"; }
  CHECK(run_cli({"eval", log_file.path.string(), "--attack-tids",
                 bad_tids.path.string(), "--supports", "2"}) == cli::exit_config);
}

TEST_CASE("rank reads stdin when no input path is given") {
  std::istringstream fake_stdin("1 3 4\n2 3 5\n1 2 3 5\n");
  std::streambuf* saved = std::cin.rdbuf(fake_stdin.rdbuf());
  TempFile out("stdin_rank");
  const int rc = run_cli({"rank", "--min-support", "50%", "--score", "simple",
                          "--out", out.path.string()});
  std::cin.rdbuf(saved);
  REQUIRE(rc == cli::exit_ok);
  CHECK(lines_of(slurp(out.path)).size() == 4);
}
