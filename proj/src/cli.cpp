#include "alertrank/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alertrank/errors.hpp"
#include "alertrank/ingest.hpp"
#include "alertrank/miner.hpp"
#include "alertrank/ranker.hpp"
#include "alertrank/scorer.hpp"
#include "alertrank/sweep.hpp"
#include "alertrank/synth.hpp"

namespace alertrank::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;  // empty -> stdin (rank/mine) or synthetic log (eval)
  std::string min_support;
  std::string score = "fpof";
  double top_percent = 1.0;
  std::vector<std::uint32_t> ignore_fields;
  std::optional<std::uint32_t> max_pattern_len;
  std::string out;

  // eval
  std::vector<std::uint32_t> supports{2, 4, 6};
  std::uint64_t seed = 42;
  std::size_t n_routine = 10000;
  std::size_t n_attacks = 5;
  std::string attack_ip = "203.0.113.66";
  std::string attack_tids_path;
};

Dataset load_input(const Options& opts) {
  IngestConfig config{opts.ignore_fields};
  if (opts.input.empty()) return parse_log(std::cin, config);
  return parse_log_file(opts.input, config);
}

ScoreKind parse_kind(const std::string& text) {
  auto kind = score_kind_from_string(text);
  if (!kind) throw ConfigError("unknown score kind '" + text + "'");
  return *kind;
}

// Output lands in a temp file first and is renamed into place, so a failed
// run leaves either no file or the previous complete one.
void emit_output(const std::string& out_path,
                 const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  fs::path out(out_path);
  fs::path tmp = out;
  tmp += ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) throw IoError("cannot open " + tmp.string() + " for writing");
    try {
      emit(stream);
    } catch (...) {
      stream.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw;
    }
    stream.flush();
    if (!stream) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, out, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename output into " + out.string());
  }
}

std::vector<Tid> read_attack_tids(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Tid> tids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream scan(line);
    long long value = -1;
    std::string trailing;
    if (!(scan >> value) || value < 0 || (scan >> trailing))
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected one non-negative tid per line");
    tids.push_back(static_cast<Tid>(value));
  }
  if (in.bad()) throw IoError("I/O error reading " + path);
  if (tids.empty()) throw ConfigError(path + ": no attack tids found");
  return tids;
}

int run_rank(const Options& opts) {
  const Dataset dataset = load_input(opts);
  if (dataset.empty())
    throw DegenerateInputError("input contains no alerts; nothing to rank");

  const MinSupport min_support = MinSupport::parse(opts.min_support);
  const ScoreKind kind = parse_kind(opts.score);
  const FrequentPatternSet fps =
      mine(dataset, MinerConfig{min_support, opts.max_pattern_len});
  const auto scores = score_all(dataset, fps, kind);
  TriageReport report = top_p(rank(scores, dataset), opts.top_percent);

  const ReportMeta meta{dataset.size(), kind, min_support.to_string(),
                        opts.top_percent};
  emit_output(opts.out,
              [&](std::ostream& o) { write_ranked_report(o, report, meta); });

  std::fprintf(stderr, "n=%zu patterns=%zu top_p_cut=%zu\n", dataset.size(),
               fps.size(), report.candidate_count);
  return exit_ok;
}

int run_mine(const Options& opts) {
  const Dataset dataset = load_input(opts);
  const MinSupport min_support = MinSupport::parse(opts.min_support);
  const FrequentPatternSet fps =
      mine(dataset, MinerConfig{min_support, opts.max_pattern_len});
  emit_output(opts.out,
              [&](std::ostream& o) { write_pattern_dump(o, fps, dataset); });
  return exit_ok;
}

int run_eval(const Options& opts) {
  Dataset dataset;
  std::vector<Tid> attack_tids;
  if (!opts.input.empty()) {
    if (opts.attack_tids_path.empty())
      throw ConfigError("eval on an input log requires --attack-tids");
    dataset = load_input(opts);
    attack_tids = read_attack_tids(opts.attack_tids_path);
  } else {
    SyntheticSpec spec = desk_scale_spec();
    spec.n_routine = opts.n_routine;
    spec.n_attacks = opts.n_attacks;
    spec.attack_source_ip = opts.attack_ip;
    spec.seed = opts.seed;
    SyntheticLog log = generate_log(spec);
    dataset = std::move(log.dataset);
    attack_tids = std::move(log.attack_tids);
  }

  const SweepResult result = sweep(dataset, attack_tids, opts.supports,
                                   parse_kind(opts.score), opts.max_pattern_len);
  emit_output(opts.out, [&](std::ostream& o) { write_sweep_tsv(o, result); });
  return exit_ok;
}

void add_common_flags(CLI::App* cmd, Options& opts, bool needs_support) {
  auto* sup = cmd->add_option("--min-support", opts.min_support,
                              "minimum support: absolute count or N%");
  if (needs_support) sup->required();
  cmd->add_option("--ignore-fields", opts.ignore_fields,
                  "comma-separated token positions to drop")
      ->delimiter(',');
  cmd->add_option("--max-pattern-len", opts.max_pattern_len,
                  "longest pattern to mine (no cap by default)");
  cmd->add_option("--out", opts.out, "output path (stdout when absent)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  Options opts;

  CLI::App app{"mine frequent alert patterns and triage IDS logs: rare alerts "
               "first, routine noise last"};
  app.require_subcommand(1);

  CLI::App* rank_cmd = app.add_subcommand(
      "rank", "score every alert and write the triage-ordered log");
  rank_cmd->add_option("input", opts.input, "alert log (stdin when absent)");
  add_common_flags(rank_cmd, opts, true);
  rank_cmd->add_option("--score", opts.score, "score kind")
      ->check(CLI::IsMember({"fpof", "simple"}));
  rank_cmd->add_option("--top-percent", opts.top_percent,
                       "candidate-true-alert cut, percent in (0,100]");

  CLI::App* mine_cmd = app.add_subcommand(
      "mine", "dump the frequent patterns with their alert tid-lists");
  mine_cmd->add_option("input", opts.input, "alert log (stdin when absent)");
  add_common_flags(mine_cmd, opts, true);

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "support sweep over a synthetic or supplied log with known attacks");
  eval_cmd->add_option("input", opts.input,
                       "alert log (synthesizes one when absent)");
  add_common_flags(eval_cmd, opts, false);
  eval_cmd->add_option("--score", opts.score, "score kind")
      ->check(CLI::IsMember({"fpof", "simple"}));
  eval_cmd->add_option("--supports", opts.supports, "support values to sweep")
      ->delimiter(',');
  eval_cmd->add_option("--seed", opts.seed, "RNG seed for the synthetic log");
  eval_cmd->add_option("--n-routine", opts.n_routine, "routine alerts to synthesize");
  eval_cmd->add_option("--n-attacks", opts.n_attacks, "attack alerts to inject");
  eval_cmd->add_option("--attack-ip", opts.attack_ip, "source ip used by attacks");
  eval_cmd->add_option("--attack-tids", opts.attack_tids_path,
                       "ground-truth attack tids, one per line (with input log)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config;
  }

  try {
    if (rank_cmd->parsed()) return run_rank(opts);
    if (mine_cmd->parsed()) return run_mine(opts);
    return run_eval(opts);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_io;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_config;
  } catch (const DegenerateInputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_degenerate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_io;
  }
}

}  // namespace alertrank::cli
