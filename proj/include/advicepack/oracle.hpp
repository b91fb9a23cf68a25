#pragma once

#include "advicepack/model.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace advicepack {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct OptResult {
  int cost = 0;        // best bin count found
  int lower_bound = 0; // proven lower bound; equals cost when certified
  bool certified = false;
  std::uint64_t nodes = 0;
  Packing witness;     // always passes verify_packing with `cost` bins
};

// Exact optimal packing by branch and bound: items are branched over existing
// bins or one next new bin (symmetry break), with a First-Fit-decreasing
// incumbent, a material lower bound, equal-load bin dedup, and a perfect-fill
// commit rule. When the node budget runs out the result carries the best
// known upper/lower bounds with certified = false.
OptResult opt_exact(const RequestSequence& seq,
                    std::uint64_t node_budget = kDefaultNodeBudget);

// Same search restricted to at most `max_items_per_bin` items in any bin.
OptResult opt_exact_capped(const RequestSequence& seq, int max_items_per_bin,
                           std::uint64_t node_budget = kDefaultNodeBudget);

// One bin's content as size -> multiplicity.
using BinConfig = std::vector<std::pair<Rat, int>>;

struct ConfigSolution {
  int cost = 0;
  std::vector<BinConfig> bins;
};

// Optimal packing of a multiset given as size -> count, by searching over
// feasible bin configurations. Throws ConfigurationExplosion when more than
// `config_guard` feasible configurations exist.
ConfigSolution opt_configurations(const std::map<Rat, int>& size_counts,
                                  std::size_t config_guard = 100'000);

// The counted multiset as a sequence (sizes ascending, duplicates adjacent).
RequestSequence expand_counts(const std::map<Rat, int>& size_counts);

// Witness for the expanded sequence, for cross-checks against opt_exact.
Packing config_witness_packing(const ConfigSolution& solution,
                               const std::map<Rat, int>& size_counts);

// All optimal packings up to bin permutation; bins come out ordered by their
// smallest item index, so each partition appears exactly once. Throws
// LimitExceeded when more than `limit` packings exist.
std::vector<Packing> enumerate_optimal_packings(const RequestSequence& seq,
                                                std::size_t limit);

}  // namespace advicepack
