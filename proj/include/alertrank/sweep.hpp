#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "alertrank/scorer.hpp"
#include "alertrank/types.hpp"

namespace alertrank {

struct SweepRow {
  std::uint32_t min_support = 0;
  std::uint64_t pattern_count = 0;
  std::uint32_t worst_attack_rank = 0;
  double reduction = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // one per swept support, in input order
};

/// For each support value: mine -> score -> rank, then record the pattern
/// count, the worst rank among the known attacks, and the reduction.
/// ConfigError on an empty support list or a support < 2; miner/scorer
/// errors propagate.
SweepResult sweep(const Dataset& dataset, const std::vector<Tid>& attack_tids,
                  const std::vector<std::uint32_t>& supports, ScoreKind kind,
                  std::optional<std::uint32_t> max_pattern_len = {});

/// TSV rows `min_support<TAB>pattern_count<TAB>worst_attack_rank<TAB>reduction_pct`
/// under a '#' column header; plottable as support vs. attack placement.
void write_sweep_tsv(std::ostream& out, const SweepResult& result);

}  // namespace alertrank
