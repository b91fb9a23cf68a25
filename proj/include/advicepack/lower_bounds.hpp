#pragma once

#include "advicepack/baselines.hpp"
#include "advicepack/model.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace advicepack {

// ---- Adversarial family over powers-of-two items plus fillers ----
//
// A vector V = (v_1..v_{n-k}) with the fixed prefix (1,2,...,k) assigns each
// item a_i = 1/2^{i+1} to a bin; the fillers u_j = 1 - sum_{v_i=j} a_i top
// every bin up to exactly 1, so the optimum is k bins and unique.

struct Theorem1Vector {
  std::size_t n = 0;
  int k = 0;
  std::vector<int> v;  // length n-k, entries in 1..k, v_j = j for j <= k

  // The free tail has k^(n-2k) choices; index selects one in base k.
  static Theorem1Vector from_tail_index(std::size_t n, int k,
                                        const BigInt& index);
};

BigInt theorem1_family_size(std::size_t n, int k);
RequestSequence gen_theorem1_sequence(const Theorem1Vector& vec);
Packing theorem1_canonical_packing(const Theorem1Vector& vec);

// ---- Family over m distinct sizes with capacity scaled to 2m ----
//
// levels[i-1] = a_i is the number of bins holding i unit items; requires
// a_1 + 2 a_2 + ... + (m-2) a_{m-2} = n/2. Sizes are normalized by 2m.

RequestSequence gen_theorem2_sequence(std::size_t n, int m,
                                      const std::vector<std::uint64_t>& levels);
Packing theorem2_canonical_packing(std::size_t n, int m,
                                   const std::vector<std::uint64_t>& levels);

// ---- Solution counting for x_1 + 2 x_2 + ... + alpha x_alpha = X ----

std::uint64_t count_partition_solutions(int alpha, std::uint64_t x);
// (1 + 2X / (alpha (alpha+1)))^(alpha-1), exactly.
Rat partition_bound(int alpha, std::uint64_t x);

// ---- Reduction chain: bit guessing -> binary separation -> bin packing ----

struct SeparationParams {
  Rat eps_min = Rat(1, 100);
  Rat eps_max = Rat(1, 10);  // needs 0 < eps_min < eps_max < 1/6
};

// Strictly decreasing map from positive rationals into (eps_min, eps_max).
Rat probe_shrink(const Rat& tau, const SeparationParams& params);

struct ReductionStep {
  bool guessed_large = false;
  bool actual_large = false;
  bool mistake = false;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  RequestSequence packed_items;  // the constructed bin packing instance
  int cost = 0;                  // bins the inner algorithm opened
  int opt = 0;                   // n1 + n2, certified by witness + counting
  int mistakes() const;
  int extra_bins() const { return cost - opt; }
};

// Anything that classifies a stream of values as large/small and is told the
// truth after each guess.
class SeparationOracle {
 public:
  virtual ~SeparationOracle() = default;
  virtual bool classify_is_large(const Rat& value) = 0;
  virtual void reveal(bool actual_large) = 0;
};

// Drives an advice-free online bin packing algorithm on an adaptively built
// instance: n1 opener items of 1/2 + eps_min, one probe of 1/2 - f(value) per
// classify call (guess "large" iff the probe lands on an opener), and the
// complements of the actually-small probes at the end. The instance is
// adaptive, so only advice-free inner algorithms are meaningful here.
class SeparationFromBinPacking final : public SeparationOracle {
 public:
  SeparationFromBinPacking(std::unique_ptr<OnlineStepper> inner,
                           std::size_t n_large, SeparationParams params = {});
  bool classify_is_large(const Rat& value) override;
  void reveal(bool actual_large) override;
  // Feeds the closing complements and returns the full trace.
  ReductionTrace finish();

  // The canonical optimal witness of the instance built so far (openers
  // paired with large probes, small probes with their complements).
  static Packing canonical_witness(const ReductionTrace& trace);

 private:
  std::unique_ptr<OnlineStepper> inner_;
  SeparationParams params_;
  PackingBuilder pb_;
  std::vector<bool> opener_bin_;  // bin id -> contains a 1/2+eps_min item
  ReductionTrace trace_;
  std::vector<Rat> small_probes_;
  bool pending_guess_ = false;
  bool last_guess_ = false;
};

// Binary string guessing on top of a separation oracle: probe the midpoint of
// the open interval, translate class "large" to bit 0, and shrink the
// interval with the revealed bit.
class GuessingFromSeparation {
 public:
  explicit GuessingFromSeparation(SeparationOracle& solver);
  int guess_bit();
  void reveal_bit(int actual);
  const Rat& small() const { return small_; }
  const Rat& large() const { return large_; }

 private:
  SeparationOracle& solver_;
  Rat small_ = 0;
  Rat large_ = 1;
  Rat mid_;
  bool pending_ = false;
};

struct GuessRun {
  int mistakes = 0;
  std::vector<int> guesses;
  ReductionTrace trace;
};

// End-to-end: run the whole chain on a bit string with a named baseline as
// the inner bin packing algorithm.
GuessRun run_guessing_chain(const std::vector<int>& bits,
                            const std::string& inner_name,
                            SeparationParams params = {});

// ---- Advice lower-bound evaluators (the only floating-point code here) ----
//
// Convention: 0 log 0 = 0.

// (1 + (1-alpha) log(1-alpha) + alpha log alpha) n, for 1/2 <= alpha < 1.
double sgkh_bound(double alpha, std::uint64_t n);
// Same minus e(n), for instances that are told the number of zeros.
double sgkh_bound_known_zeros(double alpha, std::uint64_t n);

// 1 + (4c-4) log(4c-4) + (5-4c) log(5-4c), for 1 < c <= 9/8.
double binpack_coefficient(double c);
// (n * coefficient - e(n)) / 2.
double binpack_bound(double c, std::uint64_t n);

}  // namespace advicepack
