#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace toricsegre {

/// Deterministic random source. Streams are derived from a master seed and a
/// path of integers (attempt, d, tuple index, ...), so results never depend
/// on evaluation order.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  SeededRandom(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
      : engine_(derive(seed, path)) {}

  /// Uniform integer in [lo, hi], by rejection so the stream is portable.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform over the nonzero integers in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    const std::int64_t v = uniform(1, 2 * bound);
    return v <= bound ? v : bound - v;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix(seed);
    for (std::uint64_t p : path) h = splitmix(h ^ splitmix(p + 0x632be59bd9b4e019ULL));
    return h;
  }

  std::mt19937_64 engine_;
};

}  // namespace toricsegre
