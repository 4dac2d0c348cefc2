#pragma once

#include <cstdint>

namespace sbpg::harness {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of stream `stream` under `master`. Streams are independent of how
/// many other streams exist: player i always uses stream i + 1, the plant
/// stream 0.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(mix64(master) ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

}  // namespace sbpg::harness
