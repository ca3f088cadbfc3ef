// Benchmark: OpenMP-parallel miner vs. the same miner pinned to one thread
// vs. the serial brute-force reference. Also checks that every run agrees,
// pattern for pattern, with the single-thread result.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "alertrank/miner.hpp"
#include "alertrank/synth.hpp"
#include "alertrank/types.hpp"

using namespace alertrank;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool same_patterns(const FrequentPatternSet& a, const FrequentPatternSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.patterns()[i].items != b.patterns()[i].items) return false;
    if (a.patterns()[i].tids != b.patterns()[i].tids) return false;
  }
  return true;
}

Dataset random_small_dataset(std::mt19937_64& rng) {
  DatasetBuilder builder;
  const std::size_t n = 12 + rng() % 9;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Item> items;
    for (std::uint32_t v = 0; v < 12; ++v)
      if (rng() % 3 == 0) items.push_back(Item{v, std::to_string(v)});
    if (items.empty()) items.push_back(Item{0, "0"});
    builder.add("synthetic", std::move(items));
  }
  return builder.build();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes = {1000, 5000, 10000};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoull(argv[i], nullptr, 10));
  }

  const int max_threads = omp_get_max_threads();
  std::printf("levelwise miner, synthetic logs, min_support=2, max_pattern_len=6\n");
  std::printf("%10s %10s %12s %12s %12s %8s\n", "n", "patterns", "serial ms",
              "2 thr ms", "max thr ms", "speedup");

  for (std::size_t n : sizes) {
    SyntheticSpec spec = desk_scale_spec();
    spec.n_routine = n;
    const SyntheticLog log = generate_log(spec);
    const MinerConfig config{MinSupport::absolute(2), 6};

    omp_set_num_threads(1);
    FrequentPatternSet serial = mine(log.dataset, config);
    const double t1 = time_ms([&] { mine(log.dataset, config); }, 3);

    omp_set_num_threads(std::min(2, max_threads));
    FrequentPatternSet two = mine(log.dataset, config);
    const double t2 = time_ms([&] { mine(log.dataset, config); }, 3);

    omp_set_num_threads(max_threads);
    FrequentPatternSet wide = mine(log.dataset, config);
    const double tw = time_ms([&] { mine(log.dataset, config); }, 3);

    if (!same_patterns(serial, two) || !same_patterns(serial, wide)) {
      std::fprintf(stderr, "FATAL: thread count changed the mined pattern set\n");
      return 1;
    }
    std::printf("%10zu %10zu %12.2f %12.2f %12.2f %7.2fx\n", log.dataset.size(),
                serial.size(), t1, t2, tw, t1 / tw);
  }

  // levelwise vs. brute-force reference on oracle-sized data
  omp_set_num_threads(max_threads);
  std::mt19937_64 rng(7);
  std::vector<Dataset> small;
  for (int i = 0; i < 200; ++i) small.push_back(random_small_dataset(rng));
  const MinerConfig tiny{MinSupport::absolute(2), {}};

  const double lv = time_ms([&] {
        for (const Dataset& d : small) mine(d, tiny);
      }, 3);
  const double bf = time_ms([&] {
        for (const Dataset& d : small) brute_force_mine(d, tiny);
      }, 3);
  std::printf("\n200 oracle-scale datasets (<=20 transactions, <=12 items):\n");
  std::printf("  levelwise %.2f ms, brute force %.2f ms\n", lv, bf);
  return 0;
}
