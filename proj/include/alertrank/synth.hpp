#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alertrank/types.hpp"

namespace alertrank {

/// What a template slot renders to. Fixed slots repeat their text on every
/// line; the others draw from the generator's seeded RNG.
enum class SlotKind {
  fixed,
  counter,       // 1-based line counter
  clock_time,    // "8:57:33AM"-style timestamp
  random_id,     // 10-digit numeric id
  random_bytes,  // "46,865"-style byte count
};

struct TemplateSlot {
  SlotKind kind = SlotKind::fixed;
  std::string text;  // used when kind == fixed
};

struct LineTemplate {
  std::vector<TemplateSlot> slots;
};

/// Four routine Snort-style templates over the 13-field layout of the
/// sample alerts: id, counter, sig-id, sig-name, class, priority, date,
/// time, two numeric ids, proto, bytes, port.
std::vector<LineTemplate> default_routine_templates();

struct SyntheticSpec {
  std::vector<LineTemplate> templates;
  std::size_t n_routine = 10000;
  std::size_t n_attacks = 5;
  std::string attack_source_ip = "203.0.113.66";
  std::uint64_t seed = 42;
};

/// Desk-scale defaults: 10,000 routine alerts from the default templates
/// plus 5 injected attacks, seed 42.
SyntheticSpec desk_scale_spec();

struct SyntheticLog {
  Dataset dataset;
  std::vector<Tid> attack_tids;  // sorted ground truth
};

/// Deterministic for a given spec: routine lines drawn from the templates,
/// attack lines interleaved at seeded random positions. Every attack line
/// carries a signature-name token and the fixed source-ip token that appear
/// in no routine template. ConfigError on empty templates or n_attacks == 0.
SyntheticLog generate_log(const SyntheticSpec& spec);

}  // namespace alertrank
