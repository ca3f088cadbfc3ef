#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "alertrank/types.hpp"

namespace alertrank {

struct IngestConfig {
  /// Token positions dropped during tokenization. Empty by default:
  /// every field, timestamps and counters included, becomes an item.
  std::vector<std::uint32_t> ignore_fields;
};

/// Splits one non-blank line on runs of ASCII whitespace and returns the
/// (position, token) items, skipping positions in config.ignore_fields.
/// '\r' counts as whitespace, so CRLF input tokenizes cleanly while the
/// raw line keeps its bytes. Throws DegenerateInputError (naming the tid)
/// if no items remain.
std::vector<Item> tokenize_line(std::string_view line, Tid tid,
                                const IngestConfig& config = {});

/// Parses a whole log: one transaction per non-blank line, tids assigned
/// in encounter order (blank lines are skipped, tids stay dense). The raw
/// line is retained verbatim, so concatenating raws with '\n' reproduces
/// the input minus blank lines (assuming the input ends in a newline).
/// Throws IoError with a line number if the stream goes bad mid-read.
Dataset parse_log(std::istream& source, const IngestConfig& config = {});

/// Convenience wrapper: opens `path` in binary mode and parses it.
Dataset parse_log_file(const std::filesystem::path& path,
                       const IngestConfig& config = {});

}  // namespace alertrank
