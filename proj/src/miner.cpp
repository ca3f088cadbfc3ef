#include "alertrank/miner.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <limits>
#include <ostream>
#include <utility>

#include "alertrank/errors.hpp"

namespace alertrank {

namespace {

bool lex_less(std::span<const ItemId> a, std::span<const ItemId> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate(const MinerConfig& config) {
  if (config.max_pattern_len && *config.max_pattern_len == 0)
    throw ConfigError("max_pattern_len must be at least 1");
}

}  // namespace

bool pattern_order_less(const Pattern& a, const Pattern& b) {
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return lex_less(a.items, b.items);
}

MinSupport MinSupport::absolute(std::uint32_t count) {
  if (count == 0) throw ConfigError("absolute min_support must be at least 1");
  MinSupport m;
  m.is_fraction_ = false;
  m.count_ = count;
  return m;
}

MinSupport MinSupport::fraction(double f) {
  if (!(f > 0.0) || f > 1.0)
    throw ConfigError("fractional min_support must be in (0, 1]");
  MinSupport m;
  m.is_fraction_ = true;
  m.fraction_ = f;
  return m;
}

MinSupport MinSupport::parse(std::string_view text) {
  if (text.empty()) throw ConfigError("empty min_support");
  if (text.back() == '%') {
    const std::string_view num = text.substr(0, text.size() - 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw ConfigError("bad min_support '" + std::string(text) + "'");
    return fraction(value / 100.0);
  }
  std::uint32_t count = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("bad min_support '" + std::string(text) + "'");
  return absolute(count);
}

std::uint32_t MinSupport::resolve(std::size_t dataset_size) const {
  if (!is_fraction_) return count_;
  // ceil(f * n), guarded against the representation error of e.g. 0.1 * 10.
  const double scaled = fraction_ * static_cast<double>(dataset_size);
  auto abs = static_cast<std::uint64_t>(std::ceil(scaled - 1e-9));
  if (abs < 1) abs = 1;
  if (abs > std::numeric_limits<std::uint32_t>::max())
    throw ConfigError("resolved min_support overflows");
  return static_cast<std::uint32_t>(abs);
}

std::string MinSupport::to_string() const {
  if (!is_fraction_) return std::to_string(count_);
  double pct = fraction_ * 100.0;
  if (pct == static_cast<double>(static_cast<std::uint64_t>(pct)))
    return std::to_string(static_cast<std::uint64_t>(pct)) + "%";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g%%", pct);
  return buf;
}

std::vector<Tid> tidlist_intersect(std::span<const Tid> a, std::span<const Tid> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<Tid> out;
  if (a.empty()) return out;
  if (b.size() / a.size() >= 32) {
    // highly asymmetric: binary-search the long list instead of merging
    auto lo = b.begin();
    for (Tid x : a) {
      lo = std::lower_bound(lo, b.end(), x);
      if (lo == b.end()) break;
      if (*lo == x) {
        out.push_back(x);
        ++lo;
      }
    }
    return out;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

namespace {

bool equal_prefix(const std::vector<ItemId>& a, const std::vector<ItemId>& b,
                  std::size_t len) {
  return std::equal(a.begin(), a.begin() + len, b.begin());
}

bool itemset_present(std::span<const Pattern> sorted, const std::vector<ItemId>& items) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), items,
                             [](const Pattern& p, const std::vector<ItemId>& key) {
                               return lex_less(p.items, key);
                             });
  return it != sorted.end() && it->items == items;
}

// Candidate pruning: every k-subset of a (k+1)-candidate must be frequent.
// Dropping either of the last two positions reproduces the parents, so only
// the k-1 subsets missing an earlier position need checking.
bool survives_prune(const std::vector<ItemId>& candidate,
                    std::span<const Pattern> frequent_k) {
  const std::size_t k = candidate.size() - 1;
  std::vector<ItemId> sub(k);
  for (std::size_t drop = 0; drop + 1 < k; ++drop) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < candidate.size(); ++i)
      if (i != drop) sub[w++] = candidate[i];
    if (!itemset_present(frequent_k, sub)) return false;
  }
  return true;
}

}  // namespace

std::vector<Candidate> candidate_gen(std::span<const Pattern> frequent_k) {
  std::vector<Candidate> out;
  if (frequent_k.size() < 2) return out;
  const std::size_t k = frequent_k.front().items.size();
  assert(std::all_of(frequent_k.begin(), frequent_k.end(),
                     [k](const Pattern& p) { return p.items.size() == k; }));

  for (std::size_t lo = 0; lo < frequent_k.size();) {
    std::size_t hi = lo + 1;
    while (hi < frequent_k.size() &&
           equal_prefix(frequent_k[lo].items, frequent_k[hi].items, k - 1))
      ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        Candidate c;
        c.items = frequent_k[i].items;
        c.items.push_back(frequent_k[j].items.back());
        c.parent_a = i;
        c.parent_b = j;
        if (k == 1 || survives_prune(c.items, frequent_k))
          out.push_back(std::move(c));
      }
    }
    lo = hi;
  }
  return out;
}

namespace {

// Joins the frequent 1-sets without materializing the candidate list: the
// pair (i, j) maps to a flat slot, each slot is filled independently (safe
// to parallelize), and survivors are emitted in (i, j) order, which is
// exactly the canonical candidate order. Row blocks bound transient memory
// when there are many frequent items.
std::vector<Pattern> join_level1(std::span<const Pattern> f1, std::uint32_t min_sup) {
  std::vector<Pattern> next;
  const std::size_t m = f1.size();
  if (m < 2) return next;

  constexpr std::size_t kBlockPairs = 1u << 22;
  std::size_t row = 0;
  while (row + 1 < m) {
    // rows [row, row_end) so the block holds at most kBlockPairs slots
    std::size_t row_end = row;
    std::size_t pairs = 0;
    while (row_end + 1 < m) {
      const std::size_t row_pairs = m - row_end - 1;
      if (pairs > 0 && pairs + row_pairs > kBlockPairs) break;
      pairs += row_pairs;
      ++row_end;
    }

    std::vector<std::size_t> offset(row_end - row + 1, 0);
    for (std::size_t i = row; i < row_end; ++i)
      offset[i - row + 1] = offset[i - row] + (m - i - 1);

    std::vector<std::vector<Tid>> slots(pairs);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = static_cast<std::int64_t>(row);
         i < static_cast<std::int64_t>(row_end); ++i) {
      const std::size_t base = offset[static_cast<std::size_t>(i) - row];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) {
        auto tids = tidlist_intersect(f1[static_cast<std::size_t>(i)].tids, f1[j].tids);
        if (tids.size() >= min_sup)
          slots[base + (j - static_cast<std::size_t>(i) - 1)] = std::move(tids);
      }
    }

    for (std::size_t i = row; i < row_end; ++i) {
      const std::size_t base = offset[i - row];
      for (std::size_t j = i + 1; j < m; ++j) {
        auto& tids = slots[base + (j - i - 1)];
        if (tids.size() >= min_sup)
          next.push_back(Pattern{{f1[i].items[0], f1[j].items[0]}, std::move(tids)});
      }
    }
    row = row_end;
  }
  return next;
}

std::vector<Pattern> join_level(std::span<const Pattern> fk, std::uint32_t min_sup) {
  std::vector<Pattern> next;
  auto candidates = candidate_gen(fk);
  if (candidates.empty()) return next;

  std::vector<std::vector<Tid>> tids(candidates.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(candidates.size()); ++idx) {
    const Candidate& c = candidates[static_cast<std::size_t>(idx)];
    auto result = tidlist_intersect(fk[c.parent_a].tids, fk[c.parent_b].tids);
    if (result.size() >= min_sup) tids[static_cast<std::size_t>(idx)] = std::move(result);
  }

  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (tids[idx].size() >= min_sup)
      next.push_back(Pattern{std::move(candidates[idx].items), std::move(tids[idx])});
  }
  return next;
}

}  // namespace

FrequentPatternSet mine(const Dataset& dataset, const MinerConfig& config) {
  validate(config);
  const std::size_t n = dataset.size();
  const std::uint32_t min_sup = config.min_support.resolve(n);
  const std::uint32_t cap =
      config.max_pattern_len.value_or(std::numeric_limits<std::uint32_t>::max());

  std::vector<Pattern> result;
  if (n == 0) return FrequentPatternSet(std::move(result), min_sup, 0);

  // level 1: tid-lists per item, built in tid order so they come out sorted
  std::vector<std::vector<Tid>> item_tids(dataset.item_count());
  for (const Transaction& t : dataset.transactions())
    for (ItemId id : t.items) item_tids[id].push_back(t.tid);

  std::vector<Pattern> level;
  for (ItemId id = 0; id < item_tids.size(); ++id) {
    if (item_tids[id].size() >= min_sup)
      level.push_back(Pattern{{id}, std::move(item_tids[id])});
  }
  item_tids.clear();
  item_tids.shrink_to_fit();

  std::uint32_t k = 1;
  while (!level.empty()) {
    result.insert(result.end(), std::make_move_iterator(level.begin()),
                  std::make_move_iterator(level.end()));
    const std::size_t level_size = level.size();
    level.clear();
    if (k >= cap) break;

    std::span<const Pattern> fk(result.data() + (result.size() - level_size),
                                level_size);
    level = (k == 1) ? join_level1(fk, min_sup) : join_level(fk, min_sup);
    ++k;
  }

  return FrequentPatternSet(std::move(result), min_sup, n);
}

void write_pattern_dump(std::ostream& out, const FrequentPatternSet& fps,
                        const Dataset& dataset) {
  for (const Pattern& p : fps.patterns()) {
    out << p.support() << '\t';
    for (std::size_t i = 0; i < p.tids.size(); ++i) {
      if (i) out << ',';
      out << p.tids[i];
    }
    out << '\t';
    for (std::size_t i = 0; i < p.items.size(); ++i) {
      if (i) out << ' ';
      const Item& item = dataset.item(p.items[i]);
      out << item.field_index << '=' << item.token;
    }
    out << '\n';
  }
}

}  // namespace alertrank
