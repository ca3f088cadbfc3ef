#include "alertrank/scorer.hpp"

#include <algorithm>
#include <cstdint>

#include "alertrank/errors.hpp"

namespace alertrank {

const char* to_string(ScoreKind kind) {
  return kind == ScoreKind::fpof ? "fpof" : "simple";
}

std::optional<ScoreKind> score_kind_from_string(std::string_view text) {
  if (text == "fpof") return ScoreKind::fpof;
  if (text == "simple") return ScoreKind::simple;
  return std::nullopt;
}

namespace {

bool contains(const Transaction& t, const Pattern& p) {
  return std::includes(t.items.begin(), t.items.end(), p.items.begin(), p.items.end());
}

}  // namespace

double fpof(const Transaction& t, const FrequentPatternSet& fps) {
  if (fps.empty())
    throw DegenerateInputError("FPOF is undefined for an empty frequent-pattern set");
  const double n = static_cast<double>(fps.dataset_size());
  double acc = 0.0;
  for (const Pattern& p : fps.patterns())
    if (contains(t, p)) acc += static_cast<double>(p.support()) / n;
  return acc / static_cast<double>(fps.size());
}

std::uint64_t simple_fpof(const Transaction& t, const FrequentPatternSet& fps) {
  std::uint64_t count = 0;
  for (const Pattern& p : fps.patterns())
    if (contains(t, p)) ++count;
  return count;
}

std::vector<AlertScore> score_all(const Dataset& dataset, const FrequentPatternSet& fps,
                                  ScoreKind kind) {
  if (fps.dataset_size() != dataset.size())
    throw ConfigError("pattern set was mined from a dataset of a different size");

  const std::size_t n = dataset.size();
  std::vector<AlertScore> out(n);
  if (n == 0) return out;
  if (kind == ScoreKind::fpof && fps.empty())
    throw DegenerateInputError("FPOF is undefined for an empty frequent-pattern set");

  // Patterns are inverted into per-tid rows of pattern indices. Filling in
  // pattern order keeps each row ascending, so every per-tid sum below runs
  // in the same order the naive scan would use, for any thread count.
  std::vector<std::uint32_t> counts(n, 0);
  for (const Pattern& p : fps.patterns())
    for (Tid t : p.tids) ++counts[t];

  if (kind == ScoreKind::simple) {
    for (Tid t = 0; t < static_cast<Tid>(n); ++t)
      out[t] = AlertScore{t, static_cast<double>(counts[t]), kind};
    return out;
  }

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t t = 0; t < n; ++t) offset[t + 1] = offset[t] + counts[t];
  std::vector<std::uint32_t> rows(offset[n]);
  {
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    const auto& patterns = fps.patterns();
    for (std::size_t p = 0; p < patterns.size(); ++p)
      for (Tid t : patterns[p].tids) rows[cursor[t]++] = static_cast<std::uint32_t>(p);
  }

  std::vector<double> support_frac(fps.size());
  for (std::size_t p = 0; p < fps.size(); ++p)
    support_frac[p] =
        static_cast<double>(fps.patterns()[p].support()) / static_cast<double>(n);

  const double pattern_count = static_cast<double>(fps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t) {
    double acc = 0.0;
    for (std::size_t r = offset[static_cast<std::size_t>(t)];
         r < offset[static_cast<std::size_t>(t) + 1]; ++r)
      acc += support_frac[rows[r]];
    out[static_cast<std::size_t>(t)] =
        AlertScore{static_cast<Tid>(t), acc / pattern_count, ScoreKind::fpof};
  }
  return out;
}

}  // namespace alertrank
