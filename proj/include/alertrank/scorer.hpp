#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "alertrank/miner.hpp"
#include "alertrank/types.hpp"

namespace alertrank {

enum class ScoreKind { fpof, simple };

const char* to_string(ScoreKind kind);
std::optional<ScoreKind> score_kind_from_string(std::string_view text);

struct AlertScore {
  Tid tid = 0;
  double value = 0.0;  // fpof: in [0,1]; simple: a non-negative integer count
  ScoreKind kind = ScoreKind::fpof;
};

/// Frequent Pattern Outlier Factor of one transaction:
///   ( sum over patterns X contained in t of support(X)/|D| ) / |FPS|
/// with support taken as a fraction of the dataset size, so the value is
/// in [0,1]. Small values mark outliers. Scans the pattern list directly;
/// this is the reference implementation score_all() must agree with.
/// Throws DegenerateInputError on an empty pattern set.
double fpof(const Transaction& t, const FrequentPatternSet& fps);

/// Number of frequent patterns contained in t. Empty pattern set -> 0.
std::uint64_t simple_fpof(const Transaction& t, const FrequentPatternSet& fps);

/// Scores every transaction, tid order preserved. Runs off the patterns'
/// tid-lists (each pattern already knows its transactions), so the cost is
/// O(sum of tid-list lengths) rather than a per-transaction subset scan,
/// and per-tid sums are accumulated in pattern order so the result is
/// bit-identical to the naive definition for any thread count.
/// ConfigError if fps was mined from a dataset of a different size;
/// DegenerateInputError for kind=fpof with an empty pattern set.
std::vector<AlertScore> score_all(const Dataset& dataset, const FrequentPatternSet& fps,
                                  ScoreKind kind);

}  // namespace alertrank
