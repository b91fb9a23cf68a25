#pragma once

#include "advicepack/baselines.hpp"
#include "advicepack/model.hpp"
#include "advicepack/oracle.hpp"
#include "advicepack/tape.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace advicepack {

// Each advice algorithm is an (oracle, online machine) pair: the oracle sees
// the whole sequence and writes the tape; the machine reads tape bits as it
// serves items. Machines treat a tape that contradicts the arrivals as a
// flagged, recoverable state and fall back to First-Fit over all bins, so
// corrupted tapes still terminate with a valid packing.

// ---- FullIndex: replay optimal bin indices, Best-Fit for the last two ----

BitString full_index_oracle(const RequestSequence& seq,
                            std::uint64_t opt_budget = kDefaultNodeBudget);
RunResult full_index_run(const RequestSequence& seq, AdviceTape& tape);
// n * ceil(log OPT); the declared budget, meaningful for OPT >= 2 (a single
// header bit is read even when ceil(log OPT) = 0).
std::uint64_t full_index_budget(std::size_t n, int opt_cost);

// ---- DistinctReplay: per-size counts over a declared universe ----

BitString frequency_oracle(const RequestSequence& seq,
                           const std::vector<Rat>& universe);
RunResult distinct_replay_run(const RequestSequence& seq,
                              const std::vector<Rat>& universe,
                              AdviceTape& tape);
// m * ceil(log(n+1)) + e(ceil(log(n+1))); read exactly.
std::uint64_t distinct_replay_budget(std::size_t n, std::size_t m);

// ---- ThreeHalves: number of medium items, critical bins, virtual levels ----

// Size classes: tiny (0,1/3], small (1/3,1/2], medium (1/2,2/3], large (2/3,1].
bool is_medium_item(const Rat& size);
bool is_large_item(const Rat& size);

BitString three_halves_oracle(const RequestSequence& seq);
// ceil(log(n+1)) + e(ceil(log(n+1))); read exactly.
std::uint64_t three_halves_budget(std::size_t n);

class ThreeHalvesMachine {
 public:
  explicit ThreeHalvesMachine(AdviceTape& tape);
  void step(const Rat& size);

  struct BinState {
    int bin;  // id in the builder's packing
    Rat virtual_level;
    bool critical = false;
    bool has_medium = false;
  };
  const std::vector<BinState>& bins() const { return bins_; }
  PackingBuilder& builder() { return pb_; }
  bool inconsistent() const { return inconsistent_; }

 private:
  AdviceTape& tape_;
  PackingBuilder pb_;
  std::vector<BinState> bins_;
  bool inconsistent_ = false;
};

RunResult three_halves_run(const RequestSequence& seq, AdviceTape& tape);

// ---- PairPacker: 1 bit per request on two-items-per-bin instances ----

// Requires an optimal packing with exactly two items in every bin (certified
// against the solver witness; BadParams otherwise).
BitString pair_packer_oracle(const RequestSequence& seq,
                             std::uint64_t opt_budget = kDefaultNodeBudget);
// Bit 0: open a new bin. Bit 1: Best-Fit among open bins; throws
// NoFeasibleBin when nothing fits, which honest advice never causes.
RunResult pair_packer_run(const RequestSequence& seq, AdviceTape& tape);

// ---- Harmonic on (1/4,1/2]: the advice-free type-3 sub-strategy ----

// 1/2 for sizes in (1/3,1/2], 1/3 for (1/4,1/3]; OutOfRange otherwise.
Rat harmonic_weight(const Rat& size);

class HarmonicType3 {
 public:
  int step(PackingBuilder& pb, const Rat& size);
  // Bins already closed by Next-Fit; each holds two larges or three smalls.
  std::vector<int> full_bins() const;

 private:
  NextFit larges_, smalls_;
  std::vector<int> large_bins_, small_bins_;
};

RunResult harmonic_type3_run(const RequestSequence& seq);

// ---- FourThirds: good/bad split + per-type handlers, 2 bits per item ----

struct FourThirdsParams {
  Rat epsilon;  // 0 < epsilon < 1/11

  Rat eps_prime() const { return epsilon * Rat(11, 60); }
  Rat tiny_threshold() const { return 5 * eps_prime(); }
  int grid_size() const;  // ceil(1 / eps')
};

// Smallest multiple of eps' that is >= size, capped at 1.
Rat round_up_to_grid(const Rat& size, const Rat& eps_prime);

struct GoodBadSplit {
  std::vector<bool> bin_is_good;      // per witness bin
  std::vector<bool> item_in_good_bin; // per item
  int good_bins = 0;
  int bad_bins = 0;
};
// Good bin: the items smaller than 1/4 in it total at least 5 eps'.
GoodBadSplit classify_good_bad(const RequestSequence& seq,
                               const Packing& witness, const Rat& eps_prime);

BitString four_thirds_oracle(const RequestSequence& seq,
                             const FourThirdsParams& params,
                             std::uint64_t opt_budget = kDefaultNodeBudget);
RunResult four_thirds_run(const RequestSequence& seq,
                          const FourThirdsParams& params, AdviceTape& tape);
// e(n) + grid_size * ceil(log(n+1)); total bits read = header + 2n.
std::uint64_t four_thirds_header_bits(std::size_t n,
                                      const FourThirdsParams& params);

}  // namespace advicepack
