#pragma once

#include <cstdint>
#include <random>

namespace zerotig {

// Seeded generator wrapper so every stochastic choice in the pipeline is
// reproducible from TrainConfig::seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(engine_);
  }

  double normal(double mean, double stddev) {
    std::normal_distribution<double> d(mean, stddev);
    return d(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Derive an independent stream (e.g. one per subnetwork) via splitmix64.
  Rng fork(std::uint64_t salt) const {
    std::uint64_t z = seed_ + (salt + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
};

}  // namespace zerotig
