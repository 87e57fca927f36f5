#pragma once

// Random streams for reproducible experiments.
//
// Every stochastic routine takes either an explicit 64-bit seed or an Rng
// handle. Independent streams (one per replication, per task, ...) are
// derived from a root seed with derive_seed(), which applies the SplitMix64
// finalizer to the seed and the stream coordinates. The engine itself is the
// standard 64-bit Mersenne Twister, so a given seed reproduces bit-identical
// draws on a given standard library.

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gsest {

using Rng = std::mt19937_64;

// SplitMix64 output function (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the sub-stream addressed by `coords` under `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t c : coords) h = splitmix64(h ^ splitmix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

}  // namespace gsest
