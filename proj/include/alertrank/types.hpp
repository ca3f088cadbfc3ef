#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alertrank {

/// Transaction id: 0-based index of an alert line within its dataset.
using Tid = std::uint32_t;

/// Dense per-dataset item id. Ids are assigned so that ascending ItemId
/// equals the canonical (field_index, token) order.
using ItemId = std::uint32_t;

/// The atomic unit of mining: a token tagged with the whitespace-field
/// position it occupies. The same token at two different positions is
/// two different items; that is what lets a set of items act as a line
/// template with wildcards at the unconstrained positions.
struct Item {
  std::uint32_t field_index = 0;
  std::string token;

  // Canonical order: field_index first, then bytewise on the token.
  auto operator<=>(const Item&) const = default;
};

/// One alert line as a set of items. `items` is sorted ascending and
/// duplicate-free; `raw` preserves the line byte-exact (no newline).
struct Transaction {
  Tid tid = 0;
  std::vector<ItemId> items;
  std::string raw;
};

/// An immutable collection of transactions plus the item table they are
/// encoded against. Safe to share across threads once built.
class Dataset {
 public:
  Dataset() = default;

  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  const Transaction& transaction(Tid tid) const { return transactions_.at(tid); }
  const std::vector<Transaction>& transactions() const { return transactions_; }

  std::size_t item_count() const { return items_.size(); }
  const Item& item(ItemId id) const { return items_.at(id); }
  const std::vector<Item>& items() const { return items_; }

  std::optional<ItemId> find_item(const Item& item) const;

 private:
  friend class DatasetBuilder;

  std::vector<Transaction> transactions_;
  std::vector<Item> items_;  // sorted ascending; index == ItemId
};

/// Accumulates (raw line, items) rows, then interns the items into dense
/// ids ordered by (field_index, token). Tids are assigned in insertion
/// order. build() consumes the builder.
class DatasetBuilder {
 public:
  /// Appends one transaction and returns the tid it was assigned.
  /// Throws std::invalid_argument on an empty item set, a whitespace
  /// token, or two different tokens at the same field position.
  Tid add(std::string raw_line, std::vector<Item> items);

  /// Number of transactions added so far (== the next tid).
  std::size_t pending() const { return rows_.size(); }

  Dataset build();

 private:
  struct Row {
    std::string raw;
    std::vector<Item> items;
  };
  std::vector<Row> rows_;
};

}  // namespace alertrank
