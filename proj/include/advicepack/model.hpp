#pragma once

#include "advicepack/errors.hpp"
#include "advicepack/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace advicepack {

// Item sizes in arrival order; every entry must lie in (0, 1].
using RequestSequence = std::vector<Rat>;

struct Bin {
  std::vector<std::size_t> items;  // indices into the request sequence
  Rat load;
};

struct Packing {
  std::vector<Bin> bins;
  std::vector<int> assignment;  // item index -> bin index, -1 when unassigned

  // Cost is the number of non-empty bins; reserved-but-unused bins are free.
  int cost() const;
  Rat residual(int bin) const { return Rat(1) - bins[bin].load; }
};

struct StepDecision {
  int bin = -1;
  bool opened_new = false;
};

struct RunResult {
  Packing packing;
  int cost = 0;
  std::uint64_t advice_bits_read = 0;
  std::vector<StepDecision> trace;
  // Set when an advice-driven algorithm detected a tape inconsistent with the
  // arrivals and fell back to First-Fit. Honest oracles never trigger it.
  bool advice_inconsistent = false;
};

inline constexpr int kNewBin = -1;

// Places item `index` with size `size` into bin `target` (kNewBin opens a
// fresh bin) and returns the bin used. Throws OverflowRejected when the item
// does not fit: placements are never silently truncated.
int place(Packing& packing, int target, std::size_t index, const Rat& size);

bool verify_packing(const RequestSequence& seq, const Packing& packing,
                    std::vector<std::string>* violations = nullptr);

// Reapplies a decision trace to the sequence; the result must equal the run's
// packing (replay determinism).
Packing replay_trace(const RequestSequence& seq,
                     const std::vector<StepDecision>& trace);

// Builds a packing item by item and records the decision trace. All online
// algorithms in this project place through one of these.
class PackingBuilder {
 public:
  // Places the next item (index = number placed so far).
  int place_next(int target, const Rat& size);
  // Opens an empty bin without placing anything (used for reserved bins).
  int open_empty_bin();

  std::size_t items_placed() const { return next_index_; }
  const Packing& packing() const { return packing_; }
  const std::vector<StepDecision>& trace() const { return trace_; }
  Packing take_packing() { return std::move(packing_); }
  std::vector<StepDecision> take_trace() { return std::move(trace_); }
  std::size_t bin_count() const { return packing_.bins.size(); }
  const Rat& load(int bin) const { return packing_.bins[bin].load; }
  bool fits(int bin, const Rat& size) const {
    return packing_.bins[bin].load + size <= 1;
  }

 private:
  Packing packing_;
  std::vector<StepDecision> trace_;
  std::size_t next_index_ = 0;
};

}  // namespace advicepack
