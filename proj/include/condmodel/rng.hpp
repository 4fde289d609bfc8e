#ifndef CONDMODEL_RNG_HPP
#define CONDMODEL_RNG_HPP

#include <cstdint>
#include <random>

namespace condmodel {

// Seeded deterministic source. Bounded draws avoid std distributions, whose
// output is implementation-defined; reports must be byte-identical across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish draw in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace condmodel

#endif
