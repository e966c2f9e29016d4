#pragma once

#include <cstdint>

namespace submotif {

// Deterministic xoshiro256** stream seeded through splitmix64.
// Platform-independent: the same seed always yields the same draw sequence,
// which the reporting layer relies on for byte-identical reruns.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, bound) via rejection; bound >= 1.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real01();

  bool bernoulli(double p);

  // Independent stream derived from (seed, tag). Children with distinct tags
  // are decorrelated, so trials can run concurrently and still reproduce.
  RandomStream child(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

// splitmix64 step; exposed because seed-derivation helpers reuse it.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace submotif
