#include "alertrank/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "alertrank/errors.hpp"

namespace alertrank {

std::vector<RankedAlert> rank(const std::vector<AlertScore>& scores,
                              const Dataset& dataset) {
  const std::size_t n = dataset.size();
  if (scores.size() != n)
    throw ConfigError("need exactly one score per transaction");

  std::vector<bool> seen(n, false);
  for (const AlertScore& s : scores) {
    if (s.tid >= n || seen[s.tid])
      throw ConfigError("scores do not cover the dataset's tids exactly once");
    seen[s.tid] = true;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a].value != scores[b].value) return scores[a].value < scores[b].value;
    return scores[a].tid < scores[b].tid;
  });

  std::vector<RankedAlert> ranked;
  ranked.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AlertScore& s = scores[order[i]];
    ranked.push_back(RankedAlert{static_cast<std::uint32_t>(i + 1), s.tid, s,
                                 dataset.transaction(s.tid).raw});
  }
  return ranked;
}

TriageReport top_p(std::vector<RankedAlert> ranked, double p) {
  if (!(p > 0.0) || p > 100.0)
    throw ConfigError("top-percent must be in (0, 100]");
  const std::size_t n = ranked.size();
  // ceil(p/100 * n) with a guard against representation error on exact cuts
  auto cut = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n) / 100.0 - 1e-9));
  if (cut > n) cut = n;
  return TriageReport{std::move(ranked), p, cut};
}

double reduction_from_cutoff(std::size_t n, std::uint32_t cutoff) {
  if (n == 0 || cutoff == 0 || cutoff > n)
    throw ConfigError("cutoff rank must be in 1..n");
  return static_cast<double>(n - cutoff) / static_cast<double>(n);
}

double reduction(const std::vector<RankedAlert>& ranked,
                 const std::vector<Tid>& attack_tids) {
  if (attack_tids.empty()) throw ConfigError("attack tid set is empty");
  const std::size_t n = ranked.size();

  std::vector<std::uint32_t> rank_of(n, 0);
  for (const RankedAlert& r : ranked) {
    if (r.tid < n) rank_of[r.tid] = r.rank;
  }

  std::uint32_t cutoff = 0;
  for (Tid tid : attack_tids) {
    if (tid >= n || rank_of[tid] == 0)
      throw ConfigError("unknown attack tid " + std::to_string(tid));
    cutoff = std::max(cutoff, rank_of[tid]);
  }
  return reduction_from_cutoff(n, cutoff);
}

namespace {

void append_score(std::string& buf, const AlertScore& s) {
  char tmp[64];
  if (s.kind == ScoreKind::fpof)
    std::snprintf(tmp, sizeof tmp, "%.6f", s.value);
  else
    std::snprintf(tmp, sizeof tmp, "%llu",
                  static_cast<unsigned long long>(s.value));
  buf += tmp;
}

}  // namespace

void write_ranked_report(std::ostream& out, const TriageReport& report,
                         const ReportMeta& meta) {
  char head[160];
  std::snprintf(head, sizeof head, "# n=%zu score=%s min_support=%s p=%g\n",
                meta.n, to_string(meta.kind), meta.min_support.c_str(),
                meta.top_percent);
  out << head;

  std::string line;
  for (const RankedAlert& r : report.ranked) {
    line.clear();
    line += std::to_string(r.rank);
    line += '\t';
    append_score(line, r.score);
    line += '\t';
    line += std::to_string(r.tid);
    line += '\t';
    line += r.raw;
    line += '\n';
    out << line;
  }
}

}  // namespace alertrank
