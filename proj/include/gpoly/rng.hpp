#pragma once

#include <cstdint>
#include <random>

namespace gpoly {

// Deterministic stream of doubles built on mt19937_64 (whose output sequence
// is pinned by the standard, so results are reproducible across platforms).
// Replica streams are derived counter-style from (base_seed, replica, tag)
// through SplitMix64, which makes every replica's draw sequence independent
// of how replicas are scheduled across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  static RngStream for_replica(std::uint64_t base_seed, std::uint64_t replica,
                               std::uint64_t tag = 0);

  // Uniform on (0,1), never returns 0 or 1.
  double uniform();

  // Standard normal via the Marsaglia polar method (one value cached).
  double normal();

  std::uint64_t raw();

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 step; advances state and returns the next word.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace gpoly
