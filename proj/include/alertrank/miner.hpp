#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alertrank/types.hpp"

namespace alertrank {

/// A frequent item-set together with the sorted list of transactions that
/// contain it. The tid-list carries the support for free: support == |tids|.
struct Pattern {
  std::vector<ItemId> items;  // ascending == canonical order
  std::vector<Tid> tids;      // ascending, duplicate-free

  std::uint32_t support() const { return static_cast<std::uint32_t>(tids.size()); }
};

/// Canonical emission order: shorter patterns first, ties broken
/// lexicographically on the item-id sequence.
bool pattern_order_less(const Pattern& a, const Pattern& b);

/// All patterns of one dataset meeting a minimum support, in canonical
/// order. Downward-closed: every non-empty subset of a member is a member.
class FrequentPatternSet {
 public:
  FrequentPatternSet() = default;
  FrequentPatternSet(std::vector<Pattern> patterns, std::uint32_t min_support_abs,
                     std::size_t dataset_size)
      : patterns_(std::move(patterns)),
        min_support_abs_(min_support_abs),
        dataset_size_(dataset_size) {}

  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::uint32_t min_support_abs() const { return min_support_abs_; }
  std::size_t dataset_size() const { return dataset_size_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }

 private:
  std::vector<Pattern> patterns_;
  std::uint32_t min_support_abs_ = 1;
  std::size_t dataset_size_ = 0;
};

/// Minimum support, given either as an absolute transaction count (>= 1)
/// or as a fraction of the dataset in (0, 1]. A fraction resolves to
/// ceil(fraction * n).
class MinSupport {
 public:
  static MinSupport absolute(std::uint32_t count);  // ConfigError if count == 0
  static MinSupport fraction(double f);             // ConfigError unless 0 < f <= 1

  /// Parses "8" (absolute) or "50%" (fraction). Throws ConfigError.
  static MinSupport parse(std::string_view text);

  std::uint32_t resolve(std::size_t dataset_size) const;
  bool is_fraction() const { return is_fraction_; }

  /// Normalized textual form, e.g. "2" or "50%".
  std::string to_string() const;

 private:
  MinSupport() = default;
  bool is_fraction_ = false;
  std::uint32_t count_ = 1;
  double fraction_ = 0.0;
};

struct MinerConfig {
  MinSupport min_support = MinSupport::absolute(2);
  /// Longest pattern to mine; no cap when absent. ConfigError if 0.
  std::optional<std::uint32_t> max_pattern_len;
};

/// Levelwise mining over the vertical (tid-list) representation: the
/// tid-list of a joined candidate is the intersection of its parents'
/// tid-lists, so support counting and alert-list bookkeeping are one step.
/// Candidates within a level are evaluated in parallel; the result is a
/// pure function of (dataset, config), bit-identical for any thread count.
FrequentPatternSet mine(const Dataset& dataset, const MinerConfig& config);

/// Serial reference miner: enumerates every item-subset occurring in any
/// transaction and counts support by scanning all transactions. Refuses
/// (ConfigError) when the dataset has more than 24 distinct items; meant
/// for tests and the benchmark, not production inputs.
FrequentPatternSet brute_force_mine(const Dataset& dataset, const MinerConfig& config);

/// A (k+1)-candidate and the indices of the two length-k patterns it was
/// joined from.
struct Candidate {
  std::vector<ItemId> items;
  std::size_t parent_a = 0;
  std::size_t parent_b = 0;
};

/// Standard prefix join: pairs of length-k patterns sharing their first
/// k-1 items produce a (k+1)-candidate; candidates with an infrequent
/// k-subset are pruned. `frequent_k` must hold equal-length item-sets in
/// canonical order (as mine() emits them). Empty or singleton input
/// yields no candidates.
std::vector<Candidate> candidate_gen(std::span<const Pattern> frequent_k);

/// Sorted-list intersection; |result| is the joined candidate's support.
std::vector<Tid> tidlist_intersect(std::span<const Tid> a, std::span<const Tid> b);

/// One pattern per line: `support<TAB>tid,tid,...<TAB>pos=token pos=token ...`
/// in canonical order. Stable byte-for-byte for a given pattern set.
void write_pattern_dump(std::ostream& out, const FrequentPatternSet& fps,
                        const Dataset& dataset);

}  // namespace alertrank
