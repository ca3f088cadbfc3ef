#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "alertrank/errors.hpp"
#include "alertrank/miner.hpp"

namespace alertrank {

// Serial reference: every item-subset that occurs in at least one
// transaction is enumerated from the transactions' bitmasks, then support
// is counted with a full scan. Independent of the levelwise path; used by
// tests and the benchmark as the ground truth.
FrequentPatternSet brute_force_mine(const Dataset& dataset, const MinerConfig& config) {
  if (config.max_pattern_len && *config.max_pattern_len == 0)
    throw ConfigError("max_pattern_len must be at least 1");

  constexpr std::size_t kMaxItems = 24;
  if (dataset.item_count() > kMaxItems)
    throw ConfigError("brute_force_mine refuses datasets with more than 24 distinct items");

  const std::size_t n = dataset.size();
  const std::uint32_t min_sup = config.min_support.resolve(n);
  const std::uint32_t cap =
      config.max_pattern_len.value_or(std::numeric_limits<std::uint32_t>::max());

  std::vector<Pattern> patterns;
  if (n == 0) return FrequentPatternSet(std::move(patterns), min_sup, 0);

  std::vector<std::uint32_t> tx_mask(n, 0);
  for (const Transaction& t : dataset.transactions())
    for (ItemId id : t.items) tx_mask[t.tid] |= 1u << id;

  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t mask : tx_mask)
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) seen.insert(sub);

  std::vector<std::uint32_t> subsets(seen.begin(), seen.end());
  std::sort(subsets.begin(), subsets.end());

  for (std::uint32_t sub : subsets) {
    if (static_cast<std::uint32_t>(std::popcount(sub)) > cap) continue;
    std::vector<Tid> tids;
    for (Tid t = 0; t < static_cast<Tid>(n); ++t)
      if ((tx_mask[t] & sub) == sub) tids.push_back(t);
    if (tids.size() < min_sup) continue;

    Pattern p;
    p.tids = std::move(tids);
    for (std::uint32_t bit = 0; bit < kMaxItems; ++bit)
      if (sub & (1u << bit)) p.items.push_back(static_cast<ItemId>(bit));
    patterns.push_back(std::move(p));
  }

  std::sort(patterns.begin(), patterns.end(), pattern_order_less);
  return FrequentPatternSet(std::move(patterns), min_sup, n);
}

}  // namespace alertrank
