#pragma once

#include <cstdint>
#include <random>

namespace nm {

// Stream purposes mixed into derived seeds so that independent consumers of
// one root seed never share a sequence.
enum class Stream : std::uint64_t {
  kGraph = 1,
  kMultipliers = 2,
  kBrownian = 3,
  kGaussianBlock = 4,
  kSpectral = 5,
  kReplication = 6,
  kBootstrap = 7,
};

std::uint64_t splitmix64(std::uint64_t x);

// Counter-based derivation: derive_seed(root, purpose, i) is a pure function,
// so stream i can be reproduced without generating streams 0..i-1.
std::uint64_t derive_seed(std::uint64_t root, Stream purpose, std::uint64_t index = 0);

// mt19937_64 with explicit uniform and Box-Muller normal transforms so the
// draws do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t root, Stream purpose, std::uint64_t index = 0)
      : engine_(derive_seed(root, purpose, index)) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nm
