#ifndef GMLAB_COREALG_RNG_HPP
#define GMLAB_COREALG_RNG_HPP

#include <cstdint>
#include <random>

namespace gmlab {

// Seeded deterministic PRNG. Every "general" choice in the toolkit (random
// hyperplanes, points, coordinate changes) draws from one of these, so a
// recorded seed reproduces a run bit for bit. Uniform sampling is done by
// rejection instead of std::uniform_int_distribution, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform value in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Derives an independent stream for a sub-task; keeps seed bookkeeping
  // hierarchical (scenario seed -> per-step seeds).
  std::uint64_t fork() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gmlab

#endif
