#include "alertrank/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace alertrank {

std::optional<ItemId> Dataset::find_item(const Item& item) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), item);
  if (it == items_.end() || *it != item) return std::nullopt;
  return static_cast<ItemId>(it - items_.begin());
}

namespace {

bool has_whitespace(const std::string& token) {
  for (char c : token) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
      return true;
  }
  return false;
}

}  // namespace

Tid DatasetBuilder::add(std::string raw_line, std::vector<Item> items) {
  const Tid tid = static_cast<Tid>(rows_.size());
  if (items.empty())
    throw std::invalid_argument("transaction " + std::to_string(tid) + " has no items");

  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  for (std::size_t i = 0; i < items.size(); ++i) {
    if (has_whitespace(items[i].token))
      throw std::invalid_argument("transaction " + std::to_string(tid) +
                                  ": token contains whitespace");
    if (i > 0 && items[i].field_index == items[i - 1].field_index)
      throw std::invalid_argument("transaction " + std::to_string(tid) +
                                  ": two items at field " +
                                  std::to_string(items[i].field_index));
  }

  rows_.push_back(Row{std::move(raw_line), std::move(items)});
  return tid;
}

Dataset DatasetBuilder::build() {
  Dataset ds;

  std::vector<Item> all;
  for (const Row& row : rows_) all.insert(all.end(), row.items.begin(), row.items.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  ds.transactions_.reserve(rows_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Row& row = rows_[t];
    Transaction tx;
    tx.tid = static_cast<Tid>(t);
    tx.raw = std::move(row.raw);
    tx.items.reserve(row.items.size());
    for (const Item& item : row.items) {
      auto it = std::lower_bound(all.begin(), all.end(), item);
      tx.items.push_back(static_cast<ItemId>(it - all.begin()));
    }
    std::sort(tx.items.begin(), tx.items.end());
    ds.transactions_.push_back(std::move(tx));
  }
  ds.items_ = std::move(all);
  rows_.clear();
  return ds;
}

}  // namespace alertrank
