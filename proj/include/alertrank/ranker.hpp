#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "alertrank/scorer.hpp"
#include "alertrank/types.hpp"

namespace alertrank {

struct RankedAlert {
  std::uint32_t rank = 0;  // 1 = most anomalous
  Tid tid = 0;
  AlertScore score;
  std::string raw;
};

/// Ascending sort by score value, ties broken by ascending tid so output
/// is stable against the original log order. Ranks are dense 1..n.
/// ConfigError if scores do not cover the dataset's tids exactly once.
std::vector<RankedAlert> rank(const std::vector<AlertScore>& scores,
                              const Dataset& dataset);

struct TriageReport {
  std::vector<RankedAlert> ranked;
  double top_p_percent = 1.0;
  std::size_t candidate_count = 0;  // == ceil(p/100 * n)

  std::span<const RankedAlert> candidate_true() const {
    return std::span<const RankedAlert>(ranked.data(), candidate_count);
  }
};

/// Cuts the top-p% candidate-true-alert prefix, p in (0, 100].
TriageReport top_p(std::vector<RankedAlert> ranked, double p);

/// (n - cutoff) / n: the fraction of the log an analyst need not review
/// once every attack has appeared by rank `cutoff`.
double reduction_from_cutoff(std::size_t n, std::uint32_t cutoff);

/// Reduction with cutoff = the worst (largest) rank among attack_tids.
/// ConfigError on an empty attack set or a tid not present in `ranked`.
double reduction(const std::vector<RankedAlert>& ranked,
                 const std::vector<Tid>& attack_tids);

struct ReportMeta {
  std::size_t n = 0;
  ScoreKind kind = ScoreKind::fpof;
  std::string min_support;  // normalized textual form, e.g. "2" or "50%"
  double top_percent = 1.0;
};

/// Ranked-output file: a '#' header recording n, score kind, min_support
/// and p, then one line per alert:
///   rank<TAB>score<TAB>tid<TAB>raw line
/// fpof scores print with 6 decimal places, simple scores as integers.
void write_ranked_report(std::ostream& out, const TriageReport& report,
                         const ReportMeta& meta);

}  // namespace alertrank
