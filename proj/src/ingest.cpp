#include "alertrank/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <string>

#include "alertrank/errors.hpp"

namespace alertrank {

namespace {

// Intra-line whitespace. '\n' never appears (lines arrive split); '\r' is
// included so CRLF logs parse while the raw line keeps its bytes.
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), is_space);
}

}  // namespace

std::vector<Item> tokenize_line(std::string_view line, Tid tid,
                                const IngestConfig& config) {
  std::vector<Item> items;
  std::uint32_t field = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    const bool ignored = std::find(config.ignore_fields.begin(),
                                   config.ignore_fields.end(),
                                   field) != config.ignore_fields.end();
    if (!ignored)
      items.push_back(Item{field, std::string(line.substr(start, i - start))});
    ++field;
  }

  if (field == 0)
    throw DegenerateInputError("transaction " + std::to_string(tid) + " is blank");
  if (items.empty())
    throw DegenerateInputError("transaction " + std::to_string(tid) +
                               " has no items left after ignore-field filtering");
  return items;
}

Dataset parse_log(std::istream& source, const IngestConfig& config) {
  DatasetBuilder builder;
  std::string line;
  std::size_t line_no = 0;  // physical line, 1-based
  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;  // tids stay dense
    const Tid tid = static_cast<Tid>(builder.pending());
    builder.add(line, tokenize_line(line, tid, config));
  }
  if (source.bad())
    throw IoError("I/O error reading source at line " + std::to_string(line_no + 1));
  return builder.build();
}

Dataset parse_log_file(const std::filesystem::path& path, const IngestConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_log(in, config);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace alertrank
