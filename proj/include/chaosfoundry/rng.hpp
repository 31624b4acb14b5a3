#pragma once

#include <cstdint>
#include <random>

namespace chaosfoundry {

// Counter-based seed splitting. Every parallel unit of work (trial, sweep
// point, noise draw) gets its own substream id derived from the master seed,
// so results do not depend on execution order or thread count.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for stream `stream` under `master`. Chainable:
// derive_seed(derive_seed(master, a), b) gives a two-level substream.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x6a09e667f3bcc909ULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace chaosfoundry
