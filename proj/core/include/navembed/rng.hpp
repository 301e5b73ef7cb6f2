#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <string_view>

namespace navembed {

inline constexpr std::uint64_t kDefaultSeed = 20100901;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines a parent seed with one path component.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t component) {
  return mix64(mix64(parent) ^ (component * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

// 64-bit FNV-1a, used to turn stream labels into path components.
constexpr std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Random engine with platform-independent helper distributions. The std
// distribution classes are implementation-defined, so they are avoided where
// bit-exact reproducibility matters.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on [0, n), unbiased (Lemire's multiply-and-reject).
  std::uint64_t uniform_index(std::uint64_t n);

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

// A reproducible stream identified by a master seed and a derivation path.
// derive() is a pure function, so sibling streams can be created in any order
// (or on any thread) and still produce the same draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed = kDefaultSeed)
      : master_(master_seed), seed_(mix64(master_seed)) {}

  RngStream derive(std::uint64_t index) const { return {master_, derive_seed(seed_, index)}; }
  RngStream derive(std::string_view label) const { return derive(hash_label(label)); }
  RngStream derive(std::initializer_list<std::uint64_t> path) const {
    RngStream s = *this;
    for (std::uint64_t c : path) s = s.derive(c);
    return s;
  }

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t seed() const { return seed_; }
  Rng engine() const { return Rng(seed_); }

 private:
  RngStream(std::uint64_t master, std::uint64_t seed) : master_(master), seed_(seed) {}

  std::uint64_t master_;
  std::uint64_t seed_;
};

}  // namespace navembed
