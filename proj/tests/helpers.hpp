#pragma once

// Utilities shared by the unit and acceptance suites.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "alertrank/miner.hpp"
#include "alertrank/types.hpp"

namespace alertrank::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(ALERTRANK_TEST_DATA_DIR) / name;
}

// Encodes abstract value-itemsets (rows of small integers) as one item per
// value, keyed by the value itself. This reproduces plain market-basket
// semantics through the positional item type: distinct values can never
// collide on a field.
inline Dataset make_value_dataset(const std::vector<std::vector<std::uint32_t>>& rows) {
  DatasetBuilder builder;
  for (const auto& row : rows) {
    std::vector<Item> items;
    std::string raw;
    for (std::uint32_t v : row) {
      if (!raw.empty()) raw += ' ';
      raw += std::to_string(v);
      items.push_back(Item{v, std::to_string(v)});
    }
    builder.add(std::move(raw), std::move(items));
  }
  return builder.build();
}

// The worked three-alert example: rows {1,3,4}, {2,3,5}, {1,2,3,5}.
inline Dataset toy_dataset() {
  return make_value_dataset({{1, 3, 4}, {2, 3, 5}, {1, 2, 3, 5}});
}

struct ValuePattern {
  std::vector<std::uint32_t> values;
  std::vector<Tid> tids;
};

// Frozen expectation for the toy dataset at 50% support (absolute 2),
// derived by brute force over all subsets of {1,2,3,4,5}; canonical order.
inline const std::vector<ValuePattern>& toy_expected_patterns() {
  static const std::vector<ValuePattern> expected = {
      {{1}, {0, 2}},       {{2}, {1, 2}},    {{3}, {0, 1, 2}},
      {{5}, {1, 2}},       {{1, 3}, {0, 2}}, {{2, 3}, {1, 2}},
      {{2, 5}, {1, 2}},    {{3, 5}, {1, 2}}, {{2, 3, 5}, {1, 2}},
  };
  return expected;
}

// For value-keyed datasets the field index *is* the value.
inline std::vector<std::uint32_t> pattern_values(const Pattern& p, const Dataset& ds) {
  std::vector<std::uint32_t> values;
  for (ItemId id : p.items) values.push_back(ds.item(id).field_index);
  return values;
}

inline bool same_fps(const FrequentPatternSet& a, const FrequentPatternSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.patterns()[i].items != b.patterns()[i].items) return false;
    if (a.patterns()[i].tids != b.patterns()[i].tids) return false;
  }
  return true;
}

// Oracle-sized random dataset: 1..20 transactions over at most 12 distinct
// values, so brute_force_mine always accepts it.
inline Dataset random_value_dataset(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 20;
  const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 12);
  std::vector<std::vector<std::uint32_t>> rows(n);
  for (auto& row : rows) {
    for (std::uint32_t v = 0; v < m; ++v)
      if (rng() % 3 == 0) row.push_back(v);
    if (row.empty()) row.push_back(static_cast<std::uint32_t>(rng() % m));
  }
  return make_value_dataset(rows);
}

}  // namespace alertrank::testing
