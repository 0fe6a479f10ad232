#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace radial {

/// Seeded stream used by growth. Draws are defined here rather than through
/// the standard distributions, whose outputs differ across library vendors,
/// so a (seed, config) pair reproduces the same structure everywhere.
class RandomStream {
 public:
  static constexpr std::string_view kGeneratorName = "std::mt19937_64";
  static constexpr std::string_view kDrawScheme = "u53-double/rejection-index v1";

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, n), n > 0, without modulo bias.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t draw = engine_();
    while (draw >= limit) {
      draw = engine_();
    }
    return draw % n;
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Per-run seed; depends only on the master seed and the run index.
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
  return mix64(mix64(master_seed) ^ mix64(run_index + 1));
}

}  // namespace radial
