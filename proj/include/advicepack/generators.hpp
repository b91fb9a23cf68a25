#pragma once

#include "advicepack/model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace advicepack {

// Bounded draws via rejection so reports are byte-identical across standard
// libraries (std distributions are not portable, mt19937_64 is).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t k);
  // uniform over [lo, hi], inclusive
  std::uint64_t in(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// n sizes p/q with q <= max_denominator, each in (0,1].
RequestSequence gen_uniform(std::size_t n, std::uint64_t seed,
                            std::uint64_t max_denominator = 64);

// n items (n even) forming n/2 pairs (x, 1-x-slack) with both sides > 1/3,
// then shuffled; every optimal packing has exactly two items per bin and
// costs n/2.
RequestSequence gen_pairs(std::size_t n, std::uint64_t seed,
                          std::uint64_t max_denominator = 64);

// n items (n divisible by 3) forming n/3 triples in (1/4,1/2] that sum to at
// most 1, then shuffled; every optimal packing has three items per bin and
// costs n/3.
RequestSequence gen_triples(std::size_t n, std::uint64_t seed,
                            std::uint64_t max_denominator = 64);

std::vector<int> gen_bits(std::size_t n, std::uint64_t seed);

}  // namespace advicepack
