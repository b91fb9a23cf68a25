#include "advicepack/generators.hpp"

namespace advicepack {

std::uint64_t SeededRng::below(std::uint64_t k) {
  if (k == 0) throw BadParams("below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % k;
}

RequestSequence gen_uniform(std::size_t n, std::uint64_t seed,
                            std::uint64_t max_denominator) {
  if (max_denominator < 1) throw BadParams("max denominator must be >= 1");
  SeededRng rng(seed);
  RequestSequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t q = rng.in(1, max_denominator);
    std::uint64_t p = rng.in(1, q);
    seq.emplace_back(BigInt(p), BigInt(q));
  }
  return seq;
}

RequestSequence gen_pairs(std::size_t n, std::uint64_t seed,
                          std::uint64_t max_denominator) {
  if (n % 2 != 0) throw BadParams("pairs generator needs even n");
  if (max_denominator < 12) throw BadParams("pairs generator needs D >= 12");
  SeededRng rng(seed);
  RequestSequence seq;
  for (std::size_t i = 0; i < n / 2; ++i) {
    // x in (1/3, 1/2], slack r/q keeping the partner above 1/3 too:
    // (q - p - r)/q > 1/3  <=>  3r < 2q - 3p
    std::uint64_t q = rng.in(12, max_denominator);
    std::uint64_t p = rng.in(q / 3 + 1, q / 2);
    std::uint64_t max_r = (2 * q - 3 * p - 1) / 3;
    std::uint64_t r = rng.below(max_r + 1);
    Rat x = Rat(BigInt(p), BigInt(q));
    Rat partner = Rat(1) - x - Rat(BigInt(r), BigInt(q));
    seq.push_back(x);
    seq.push_back(partner);
  }
  SeededRng shuffler(seed ^ 0x9e3779b97f4a7c15ull);
  shuffler.shuffle(seq);
  return seq;
}

RequestSequence gen_triples(std::size_t n, std::uint64_t seed,
                            std::uint64_t max_denominator) {
  if (n % 3 != 0) throw BadParams("triples generator needs n divisible by 3");
  if (max_denominator < 16) throw BadParams("triples generator needs D >= 16");
  SeededRng rng(seed);
  RequestSequence seq;
  for (std::size_t i = 0; i < n / 3; ++i) {
    // a, b, c in (1/4, 1/2] with a + b + c <= 1; each draw leaves room so the
    // remaining ones can still exceed 1/4.
    std::uint64_t q = rng.in(16, max_denominator);
    std::uint64_t lo = q / 4 + 1;
    std::uint64_t pa = rng.in(lo, std::min(q / 2, q - 2 * lo));
    std::uint64_t pb = rng.in(lo, std::min(q / 2, q - pa - lo));
    std::uint64_t pc = rng.in(lo, std::min(q / 2, q - pa - pb));
    seq.emplace_back(BigInt(pa), BigInt(q));
    seq.emplace_back(BigInt(pb), BigInt(q));
    seq.emplace_back(BigInt(pc), BigInt(q));
  }
  SeededRng shuffler(seed ^ 0x9e3779b97f4a7c15ull);
  shuffler.shuffle(seq);
  return seq;
}

std::vector<int> gen_bits(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<int> bits(n);
  for (auto& b : bits) b = static_cast<int>(rng.below(2));
  return bits;
}

}  // namespace advicepack
