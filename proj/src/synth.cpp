#include "alertrank/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <utility>

#include "alertrank/errors.hpp"
#include "alertrank/ingest.hpp"

namespace alertrank {

namespace {

LineTemplate routine(const char* sig_id, const char* sig_name, const char* cls,
                     const char* prio, const char* proto, const char* port) {
  LineTemplate t;
  t.slots = {
      {SlotKind::fixed, "7"},          {SlotKind::counter, ""},
      {SlotKind::fixed, sig_id},       {SlotKind::fixed, sig_name},
      {SlotKind::fixed, cls},          {SlotKind::fixed, prio},
      {SlotKind::fixed, "6/22/2010"},  {SlotKind::clock_time, ""},
      {SlotKind::random_id, ""},       {SlotKind::random_id, ""},
      {SlotKind::fixed, proto},        {SlotKind::random_bytes, ""},
      {SlotKind::fixed, port},
  };
  return t;
}

// The five attack variants differ in signature, class and target port so
// that the only items shared across all attacks are the global fields and
// the source ip. Priority 1 is common to attacks and used by no routine
// template.
struct AttackVariant {
  const char* sig_id;
  const char* sig_name;
  const char* cls;
  const char* port;
};

constexpr AttackVariant kAttackVariants[] = {
    {"90210", "EXPLOIT/ssh-gobbles/root", "31", "22"},
    {"90211", "EXPLOIT/smb-trans2/overflow", "32", "445"},
    {"90212", "EXPLOIT/rpc-dcom/attempt", "33", "135"},
    {"90213", "EXPLOIT/http-cmd-injection", "34", "8080"},
    {"90214", "EXPLOIT/ftp-site-exec", "35", "21"},
};

LineTemplate attack_template(std::size_t variant, const std::string& source_ip) {
  const AttackVariant& v = kAttackVariants[variant % std::size(kAttackVariants)];
  LineTemplate t;
  t.slots = {
      {SlotKind::fixed, "7"},          {SlotKind::counter, ""},
      {SlotKind::fixed, v.sig_id},     {SlotKind::fixed, v.sig_name},
      {SlotKind::fixed, v.cls},        {SlotKind::fixed, "1"},
      {SlotKind::fixed, "6/22/2010"},  {SlotKind::clock_time, ""},
      {SlotKind::fixed, source_ip},    {SlotKind::random_id, ""},
      {SlotKind::fixed, "6"},          {SlotKind::random_bytes, ""},
      {SlotKind::fixed, v.port},
  };
  return t;
}

std::string render(const LineTemplate& tmpl, Tid tid, std::mt19937_64& rng) {
  std::string line;
  char buf[32];
  for (std::size_t i = 0; i < tmpl.slots.size(); ++i) {
    if (i) line += ' ';
    const TemplateSlot& slot = tmpl.slots[i];
    switch (slot.kind) {
      case SlotKind::fixed:
        line += slot.text;
        break;
      case SlotKind::counter:
        line += std::to_string(tid + 1);
        break;
      case SlotKind::clock_time: {
        const unsigned h = 1 + static_cast<unsigned>(rng() % 12);
        const unsigned m = static_cast<unsigned>(rng() % 60);
        const unsigned s = static_cast<unsigned>(rng() % 60);
        const bool pm = (rng() % 2) != 0;
        std::snprintf(buf, sizeof buf, "%u:%02u:%02u%s", h, m, s, pm ? "PM" : "AM");
        line += buf;
        break;
      }
      case SlotKind::random_id:
        line += std::to_string(1000000000ull + rng() % 3000000000ull);
        break;
      case SlotKind::random_bytes: {
        const unsigned thousands = 1 + static_cast<unsigned>(rng() % 59);
        const unsigned rem = static_cast<unsigned>(rng() % 1000);
        std::snprintf(buf, sizeof buf, "%u,%03u", thousands, rem);
        line += buf;
        break;
      }
    }
  }
  return line;
}

}  // namespace

std::vector<LineTemplate> default_routine_templates() {
  return {
      routine("508", "WEB-MISC/doc/access", "25", "2", "6", "80"),
      routine("648", "WEB-MISC/robots.txt/access", "25", "2", "6", "80"),
      routine("1390", "DNS/named-version/attempt", "29", "3", "17", "53"),
      routine("882", "SMTP/relay/attempt", "30", "2", "6", "25"),
  };
}

SyntheticSpec desk_scale_spec() {
  SyntheticSpec spec;
  spec.templates = default_routine_templates();
  return spec;
}

SyntheticLog generate_log(const SyntheticSpec& spec) {
  if (spec.templates.empty())
    throw ConfigError("synthetic spec needs at least one routine template");
  if (spec.n_attacks == 0)
    throw ConfigError("synthetic spec needs at least one attack");

  std::mt19937_64 rng(spec.seed);
  const std::size_t n_total = spec.n_routine + spec.n_attacks;

  // seeded attack positions: partial Fisher-Yates over 0..n_total-1
  std::vector<Tid> positions(n_total);
  for (std::size_t i = 0; i < n_total; ++i) positions[i] = static_cast<Tid>(i);
  for (std::size_t i = 0; i < spec.n_attacks; ++i)
    std::swap(positions[i], positions[i + rng() % (n_total - i)]);
  std::vector<Tid> attack_tids(positions.begin(),
                               positions.begin() + spec.n_attacks);
  std::sort(attack_tids.begin(), attack_tids.end());

  std::vector<bool> is_attack(n_total, false);
  for (Tid t : attack_tids) is_attack[t] = true;

  DatasetBuilder builder;
  std::size_t attack_idx = 0;
  for (Tid tid = 0; tid < static_cast<Tid>(n_total); ++tid) {
    std::string line;
    if (is_attack[tid]) {
      line = render(attack_template(attack_idx++, spec.attack_source_ip), tid, rng);
    } else {
      const std::size_t which = rng() % spec.templates.size();
      line = render(spec.templates[which], tid, rng);
    }
    builder.add(line, tokenize_line(line, tid, {}));
  }

  return SyntheticLog{builder.build(), std::move(attack_tids)};
}

}  // namespace alertrank
