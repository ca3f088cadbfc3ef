#include "alertrank/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "alertrank/errors.hpp"
#include "alertrank/miner.hpp"
#include "alertrank/ranker.hpp"

namespace alertrank {

SweepResult sweep(const Dataset& dataset, const std::vector<Tid>& attack_tids,
                  const std::vector<std::uint32_t>& supports, ScoreKind kind,
                  std::optional<std::uint32_t> max_pattern_len) {
  if (supports.empty()) throw ConfigError("sweep needs at least one support value");
  for (std::uint32_t s : supports)
    if (s < 2) throw ConfigError("sweep supports must be at least 2");
  if (attack_tids.empty()) throw ConfigError("attack tid set is empty");
  if (dataset.empty()) throw DegenerateInputError("cannot sweep an empty dataset");

  SweepResult result;
  result.rows.reserve(supports.size());
  for (std::uint32_t s : supports) {
    MinerConfig config{MinSupport::absolute(s), max_pattern_len};
    const FrequentPatternSet fps = mine(dataset, config);
    const auto scores = score_all(dataset, fps, kind);
    const auto ranked = rank(scores, dataset);

    std::uint32_t worst = 0;
    {
      std::vector<std::uint32_t> rank_of(dataset.size(), 0);
      for (const RankedAlert& r : ranked) rank_of[r.tid] = r.rank;
      for (Tid tid : attack_tids) {
        if (tid >= dataset.size())
          throw ConfigError("unknown attack tid " + std::to_string(tid));
        worst = std::max(worst, rank_of[tid]);
      }
    }

    result.rows.push_back(SweepRow{s, fps.size(), worst,
                                   reduction(ranked, attack_tids)});
  }
  return result;
}

void write_sweep_tsv(std::ostream& out, const SweepResult& result) {
  out << "# min_support\tpattern_count\tworst_attack_rank\treduction_pct\n";
  char buf[96];
  for (const SweepRow& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%u\t%llu\t%u\t%.3f\n", row.min_support,
                  static_cast<unsigned long long>(row.pattern_count),
                  row.worst_attack_rank, row.reduction * 100.0);
    out << buf;
  }
}

}  // namespace alertrank
