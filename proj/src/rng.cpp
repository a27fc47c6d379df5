#include "gpoly/rng.hpp"

#include <cmath>

namespace gpoly {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) : eng_(seed) {}

RngStream RngStream::for_replica(std::uint64_t base_seed, std::uint64_t replica,
                                 std::uint64_t tag) {
  std::uint64_t s = base_seed;
  std::uint64_t a = splitmix64(s);
  s ^= replica * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  std::uint64_t b = splitmix64(s);
  s ^= tag * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL;
  std::uint64_t c = splitmix64(s);
  return RngStream(a ^ (b + 0x165667b19e3779f9ULL) ^ (c << 1));
}

std::uint64_t RngStream::raw() { return eng_(); }

double RngStream::uniform() {
  // 53 mantissa bits, shifted into (0,1) by a half-ulp offset.
  return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, q;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    q = u * u + v * v;
  } while (q >= 1.0 || q == 0.0);
  const double f = std::sqrt(-2.0 * std::log(q) / q);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

}  // namespace gpoly
