// Flip-throughput comparison: incremental engine vs brute-force rescanning
// reference, over the same problem distribution.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gsatlab/engine.hpp"
#include "gsatlab/reference.hpp"

using namespace gsat;

namespace {

struct BenchResult {
  uint64_t flips = 0;
  double seconds = 0;
};

template <typename Runner>
BenchResult time_tries(const Formula& f, uint32_t tries, uint32_t max_flips,
                       uint64_t seed, Runner runner) {
  BenchResult r;
  auto start = std::chrono::steady_clock::now();
  for (uint32_t t = 0; t < tries; ++t) {
    TryResult tr = runner(f, max_flips, derive_stream_seed(seed, "try", 0, t));
    r.flips += tr.trace.flips.size();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  uint32_t num_vars = argc > 1 ? static_cast<uint32_t>(std::atoi(argv[1])) : 200;
  uint32_t tries = argc > 2 ? static_cast<uint32_t>(std::atoi(argv[2])) : 20;
  uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 7;

  GeneratorSpec spec;
  spec.num_vars = num_vars;
  spec.num_clauses = static_cast<uint32_t>(4.3 * num_vars);
  spec.width = 3;
  spec.seed = seed;
  Formula f = generate_random_ksat(spec);
  uint32_t max_flips = num_vars * 5 / 2;

  std::printf("n=%u l=%u k=3, %u tries x %u max flips\n", num_vars,
              f.num_clauses(), tries, max_flips);

  BenchResult fast = time_tries(
      f, tries, max_flips, seed,
      [](const Formula& g, uint32_t mf, uint64_t s) { return run_try(g, mf, s); });
  std::printf("incremental: %8.0f flips/s  (%llu flips, %.3fs)\n",
              fast.flips / fast.seconds,
              static_cast<unsigned long long>(fast.flips), fast.seconds);

  BenchResult slow = time_tries(
      f, tries, max_flips, seed,
      [](const Formula& g, uint32_t mf, uint64_t s) {
        return reference::run_try_rescan(g, mf, s);
      });
  std::printf("rescanning:  %8.0f flips/s  (%llu flips, %.3fs)\n",
              slow.flips / slow.seconds,
              static_cast<unsigned long long>(slow.flips), slow.seconds);
  std::printf("speedup: %.1fx\n",
              (fast.flips / fast.seconds) / (slow.flips / slow.seconds));
  return 0;
}
