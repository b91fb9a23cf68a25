#include "advicepack/advice.hpp"

#include <algorithm>
#include <cassert>

namespace advicepack {

namespace {

// Recovery placement: First-Fit over every open bin, new bin if none fits.
int ff_over_all(PackingBuilder& pb, const Rat& size) {
  for (std::size_t b = 0; b < pb.bin_count(); ++b)
    if (pb.fits(static_cast<int>(b), size))
      return pb.place_next(static_cast<int>(b), size);
  return pb.place_next(kNewBin, size);
}

// Best-Fit scan over an explicit bin list; -1 when nothing fits.
int best_fit_among(const PackingBuilder& pb, const std::vector<int>& bins,
                   const Rat& size) {
  int best = -1;
  for (int b : bins) {
    if (!pb.fits(b, size)) continue;
    if (best == -1 || pb.load(b) > pb.load(best)) best = b;
  }
  return best;
}

RunResult finish_run(PackingBuilder& pb, const AdviceTape& tape,
                     bool inconsistent) {
  RunResult result;
  result.trace = pb.take_trace();
  result.packing = pb.take_packing();
  result.cost = result.packing.cost();
  result.advice_bits_read = tape.max_accessed();
  result.advice_inconsistent = inconsistent;
  return result;
}

// Fuzzed tapes can describe headers too wide to represent; that is just
// another inconsistency, not a crash.
constexpr std::uint64_t kHeaderInconsistent = UINT64_MAX;

std::uint64_t decode_header_value(AdviceTape& tape) {
  try {
    return decode_self_delimited(tape);
  } catch (const BadParams&) {
    return kHeaderInconsistent;
  }
}

}  // namespace

// ---------------------------------------------------------------- FullIndex

std::uint64_t full_index_budget(std::size_t n, int opt_cost) {
  int width = opt_cost <= 1 ? 0 : ceil_log2(BigInt(opt_cost));
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(width);
}

BitString full_index_oracle(const RequestSequence& seq,
                            std::uint64_t opt_budget) {
  OptResult opt = opt_exact(seq, opt_budget);
  if (!opt.certified)
    throw BudgetExhausted("full-index oracle needs a certified optimum");
  int width = opt.cost <= 1 ? 0 : ceil_log2(BigInt(opt.cost));

  BitString tape = encode_unary_terminated(static_cast<std::uint64_t>(width));
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    int bin = opt.witness.assignment[i];
    tape.append(encode_fixed(static_cast<std::uint64_t>(bin), width));
  }
  return tape;
}

RunResult full_index_run(const RequestSequence& seq, AdviceTape& tape) {
  std::size_t n = seq.size();
  std::uint64_t width_raw = decode_unary_terminated(tape);
  // An absurd header is treated like any other inconsistency: flag it and
  // serve the whole stream First-Fit, so corrupted tapes still terminate.
  bool inconsistent = width_raw > 62;
  int width = inconsistent ? 0 : static_cast<int>(width_raw);

  PackingBuilder pb;
  std::map<std::uint64_t, int> label_to_bin;

  for (std::size_t t = 0; t < n; ++t) {
    const Rat& item = seq[t];
    if (inconsistent) {
      ff_over_all(pb, item);
    } else if (t + 2 < n) {
      std::uint64_t label = tape.read_fixed(width);
      auto it = label_to_bin.find(label);
      if (it == label_to_bin.end()) {
        int bin = pb.place_next(kNewBin, item);
        label_to_bin.emplace(label, bin);
      } else if (pb.fits(it->second, item)) {
        pb.place_next(it->second, item);
      } else {
        inconsistent = true;
        ff_over_all(pb, item);
      }
    } else {
      // Best-Fit tail over the bins packed so far.
      std::vector<int> all(pb.bin_count());
      for (std::size_t b = 0; b < all.size(); ++b) all[b] = static_cast<int>(b);
      int best = best_fit_among(pb, all, item);
      pb.place_next(best == -1 ? kNewBin : best, item);
    }
  }
  return finish_run(pb, tape, inconsistent);
}

// ----------------------------------------------------------- DistinctReplay

std::uint64_t distinct_replay_budget(std::size_t n, std::size_t m) {
  std::uint64_t width = ceil_log2(BigInt(n) + 1);
  return m * width + advice_e_length(width);
}

BitString frequency_oracle(const RequestSequence& seq,
                           const std::vector<Rat>& universe) {
  std::map<Rat, std::size_t> position;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!position.emplace(universe[i], i).second)
      throw BadParams("universe contains duplicate sizes");
  }
  std::vector<std::uint64_t> counts(universe.size(), 0);
  for (const Rat& item : seq) {
    auto it = position.find(item);
    if (it == position.end())
      throw UnknownSize("item " + to_fraction_string(item) +
                        " is outside the declared universe");
    ++counts[it->second];
  }
  int width = ceil_log2(BigInt(seq.size()) + 1);
  BitString tape = encode_self_delimited(static_cast<std::uint64_t>(width));
  for (std::uint64_t c : counts) tape.append(encode_fixed(c, width));
  return tape;
}

RunResult distinct_replay_run(const RequestSequence& seq,
                              const std::vector<Rat>& universe,
                              AdviceTape& tape) {
  std::uint64_t width_raw = decode_header_value(tape);
  bool inconsistent = width_raw > 62;
  int width = inconsistent ? 0 : static_cast<int>(width_raw);

  std::vector<std::uint64_t> counts(universe.size(), 0);
  std::uint64_t total = 0;
  if (!inconsistent) {
    for (std::size_t i = 0; i < universe.size(); ++i) {
      counts[i] = tape.read_fixed(width);
      total += counts[i];
    }
    if (total > 5'000) inconsistent = true;  // fuzz guard
  }

  PackingBuilder pb;
  std::vector<std::map<Rat, int>> open_slots;
  if (!inconsistent) {
    std::map<Rat, int> size_counts;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (counts[i] == 0) continue;
      size_counts[universe[i]] += static_cast<int>(counts[i]);
    }
    try {
      ConfigSolution solution = opt_configurations(size_counts);
      // One slot table per witness bin; an arrival fills the lowest-index
      // bin that still expects its exact size.
      for (const BinConfig& bin : solution.bins) {
        pb.open_empty_bin();
        std::map<Rat, int> slots;
        for (const auto& [size, mult] : bin) slots[size] = mult;
        open_slots.push_back(std::move(slots));
      }
    } catch (const ConfigurationExplosion&) {
      inconsistent = true;
    }
  }

  std::map<Rat, bool> in_universe;
  for (const Rat& u : universe) in_universe[u] = true;

  for (const Rat& item : seq) {
    if (!in_universe.count(item))
      throw UnknownSize("item " + to_fraction_string(item) +
                        " is outside the declared universe");
    int target = -1;
    for (std::size_t b = 0; b < open_slots.size(); ++b) {
      auto it = open_slots[b].find(item);
      if (it != open_slots[b].end() && it->second > 0) {
        target = static_cast<int>(b);
        --it->second;
        break;
      }
    }
    if (target >= 0 && pb.fits(target, item)) {
      pb.place_next(target, item);
    } else {
      inconsistent = true;
      ff_over_all(pb, item);
    }
  }
  return finish_run(pb, tape, inconsistent);
}

// -------------------------------------------------------------- ThreeHalves

bool is_medium_item(const Rat& size) {
  return size > Rat(1, 2) && size <= Rat(2, 3);
}

bool is_large_item(const Rat& size) { return size > Rat(2, 3); }

std::uint64_t three_halves_budget(std::size_t n) {
  std::uint64_t width = ceil_log2(BigInt(n) + 1);
  return width + advice_e_length(width);
}

BitString three_halves_oracle(const RequestSequence& seq) {
  std::uint64_t alpha = 0;
  for (const Rat& item : seq)
    if (is_medium_item(item)) ++alpha;
  int width = ceil_log2(BigInt(seq.size()) + 1);
  BitString tape = encode_self_delimited(static_cast<std::uint64_t>(width));
  tape.append(encode_fixed(alpha, width));
  return tape;
}

ThreeHalvesMachine::ThreeHalvesMachine(AdviceTape& tape) : tape_(tape) {
  std::uint64_t width = decode_header_value(tape_);
  if (width > 62) {
    inconsistent_ = true;  // corrupted header; serve everything advice-free
    return;
  }
  std::uint64_t alpha = tape_.read_fixed(static_cast<int>(width));
  if (alpha > 100'000) {  // fuzz guard: honest alpha is at most n
    inconsistent_ = true;
    return;
  }
  // Critical bins open up front with 2/3 of their space reserved for one
  // medium item each; they stay first in First-Fit order.
  for (std::uint64_t i = 0; i < alpha; ++i) {
    int bin = pb_.open_empty_bin();
    bins_.push_back(BinState{bin, Rat(2, 3), true, false});
  }
}

void ThreeHalvesMachine::step(const Rat& size) {
  if (is_large_item(size)) {
    int bin = pb_.place_next(kNewBin, size);
    bins_.push_back(BinState{bin, size, false, false});
    return;
  }
  if (is_medium_item(size)) {
    for (BinState& b : bins_) {
      if (!b.critical || b.has_medium) continue;
      pb_.place_next(b.bin, size);
      b.has_medium = true;
      // Reservation released: the virtual level snaps to the actual level.
      b.virtual_level = pb_.load(b.bin);
      return;
    }
    // No medium-free critical bin left: the tape lied about alpha.
    inconsistent_ = true;
    int bin = pb_.place_next(kNewBin, size);
    bins_.push_back(BinState{bin, size, false, false});
    return;
  }
  // Small and tiny items go First-Fit over virtual levels across all bins.
  for (BinState& b : bins_) {
    if (b.virtual_level + size > 1) continue;
    pb_.place_next(b.bin, size);
    b.virtual_level += size;
    return;
  }
  int bin = pb_.place_next(kNewBin, size);
  bins_.push_back(BinState{bin, size, false, false});
}

RunResult three_halves_run(const RequestSequence& seq, AdviceTape& tape) {
  ThreeHalvesMachine machine(tape);
  for (const Rat& item : seq) machine.step(item);
  return finish_run(machine.builder(), tape, machine.inconsistent());
}

// --------------------------------------------------------------- PairPacker

BitString pair_packer_oracle(const RequestSequence& seq,
                             std::uint64_t opt_budget) {
  if (seq.size() % 2 != 0)
    throw BadParams("pair oracle needs an even number of items");
  OptResult opt = opt_exact(seq, opt_budget);
  if (!opt.certified)
    throw BudgetExhausted("pair oracle needs a certified optimum");
  std::vector<std::size_t> partner(seq.size());
  for (const Bin& bin : opt.witness.bins) {
    if (bin.items.size() != 2)
      throw BadParams(
          "pair oracle needs an optimal packing with two items per bin");
    partner[bin.items[0]] = bin.items[1];
    partner[bin.items[1]] = bin.items[0];
  }
  BitString tape;
  for (std::size_t i = 0; i < seq.size(); ++i)
    tape.push_back(partner[i] < i);  // 1 iff the partner already appeared
  return tape;
}

RunResult pair_packer_run(const RequestSequence& seq, AdviceTape& tape) {
  PackingBuilder pb;
  std::vector<int> bins;
  for (const Rat& item : seq) {
    bool partner_seen = tape.read_bit();
    if (!partner_seen) {
      bins.push_back(pb.place_next(kNewBin, item));
      continue;
    }
    int best = best_fit_among(pb, bins, item);
    if (best == -1)
      throw NoFeasibleBin("pair advice says the partner appeared but item " +
                          to_fraction_string(item) + " fits nowhere");
    pb.place_next(best, item);
  }
  return finish_run(pb, tape, false);
}

// ------------------------------------------------------------ HarmonicType3

Rat harmonic_weight(const Rat& size) {
  if (size > Rat(1, 3) && size <= Rat(1, 2)) return Rat(1, 2);
  if (size > Rat(1, 4) && size <= Rat(1, 3)) return Rat(1, 3);
  throw OutOfRange("harmonic type-3 item " + to_fraction_string(size) +
                   " outside (1/4, 1/2]");
}

int HarmonicType3::step(PackingBuilder& pb, const Rat& size) {
  harmonic_weight(size);  // domain check
  if (size > Rat(1, 3)) {
    int bin = larges_.step(pb, size);
    if (large_bins_.empty() || large_bins_.back() != bin)
      large_bins_.push_back(bin);
    return bin;
  }
  int bin = smalls_.step(pb, size);
  if (small_bins_.empty() || small_bins_.back() != bin)
    small_bins_.push_back(bin);
  return bin;
}

std::vector<int> HarmonicType3::full_bins() const {
  std::vector<int> full;
  for (int b : large_bins_)
    if (b != larges_.open_bin) full.push_back(b);
  for (int b : small_bins_)
    if (b != smalls_.open_bin) full.push_back(b);
  return full;
}

RunResult harmonic_type3_run(const RequestSequence& seq) {
  PackingBuilder pb;
  HarmonicType3 algo;
  for (const Rat& item : seq) algo.step(pb, item);
  RunResult result;
  result.trace = pb.take_trace();
  result.packing = pb.take_packing();
  result.cost = result.packing.cost();
  return result;
}

// --------------------------------------------------------------- FourThirds

int FourThirdsParams::grid_size() const {
  Rat inv = Rat(1) / eps_prime();
  BigInt g = numerator(inv) / denominator(inv);
  if (g * denominator(inv) != numerator(inv)) ++g;
  return static_cast<int>(g);
}

Rat round_up_to_grid(const Rat& size, const Rat& eps_prime) {
  Rat q = size / eps_prime;
  BigInt k = numerator(q) / denominator(q);
  if (k * denominator(q) != numerator(q)) ++k;
  Rat rounded = Rat(k) * eps_prime;
  return rounded > 1 ? Rat(1) : rounded;
}

GoodBadSplit classify_good_bad(const RequestSequence& seq,
                               const Packing& witness, const Rat& eps_prime) {
  GoodBadSplit split;
  split.item_in_good_bin.assign(seq.size(), false);
  Rat threshold = 5 * eps_prime;
  for (const Bin& bin : witness.bins) {
    Rat below_quarter = 0;
    for (std::size_t idx : bin.items)
      if (seq[idx] < Rat(1, 4)) below_quarter += seq[idx];
    bool good = below_quarter >= threshold;
    split.bin_is_good.push_back(good);
    if (bin.items.empty()) continue;
    (good ? split.good_bins : split.bad_bins) += 1;
    if (good)
      for (std::size_t idx : bin.items) split.item_in_good_bin[idx] = true;
  }
  return split;
}

std::uint64_t four_thirds_header_bits(std::size_t n,
                                      const FourThirdsParams& params) {
  std::uint64_t width = ceil_log2(BigInt(n) + 1);
  return advice_e_length(n) +
         static_cast<std::uint64_t>(params.grid_size()) * width;
}

namespace {

void check_four_thirds_params(const FourThirdsParams& params) {
  if (!(params.epsilon > 0 && params.epsilon < Rat(1, 11)))
    throw BadParams("four-thirds needs 0 < epsilon < 1/11");
}

}  // namespace

BitString four_thirds_oracle(const RequestSequence& seq,
                             const FourThirdsParams& params,
                             std::uint64_t opt_budget) {
  check_four_thirds_params(params);
  const Rat eps_prime = params.eps_prime();
  const std::size_t n = seq.size();

  OptResult opt = opt_exact(seq, opt_budget);
  if (!opt.certified)
    throw BudgetExhausted("four-thirds oracle needs a certified optimum");
  GoodBadSplit split = classify_good_bad(seq, opt.witness, eps_prime);

  // Normal bad items (size >= 1/4) are re-packed optimally with at most
  // three per bin; the bin occupancy is the item's type.
  std::vector<std::size_t> normal_index;
  RequestSequence normal_sizes;
  for (std::size_t i = 0; i < n; ++i) {
    if (split.item_in_good_bin[i]) continue;
    if (seq[i] < Rat(1, 4)) continue;  // tiny: below 5 eps' in a bad bin
    normal_index.push_back(i);
    normal_sizes.push_back(seq[i]);
  }
  OptResult normal_opt = opt_exact_capped(normal_sizes, 3, opt_budget);
  if (!normal_opt.certified)
    throw BudgetExhausted("four-thirds oracle: normal-item packing");

  // Per item: 0 = good, 1 = bad type 1/3/tiny, 2 = type 2 partner unseen,
  // 3 = type 2 partner seen.
  std::vector<int> code(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (split.item_in_good_bin[i]) code[i] = 0;
  for (const Bin& bin : normal_opt.witness.bins) {
    if (bin.items.size() != 2) continue;
    std::size_t a = normal_index[bin.items[0]];
    std::size_t b = normal_index[bin.items[1]];
    if (a > b) std::swap(a, b);
    code[a] = 2;
    code[b] = 3;
  }

  // Header: n, then how many good large items round into each grid class.
  int width = ceil_log2(BigInt(n) + 1);
  int grid = params.grid_size();
  std::vector<std::uint64_t> class_counts(grid, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (code[i] != 0 || seq[i] <= Rat(1, 6)) continue;
    Rat cls = round_up_to_grid(seq[i], eps_prime);
    Rat q = cls / eps_prime;
    BigInt k = numerator(q) / denominator(q);
    if (k * denominator(q) != numerator(q)) ++k;  // the capped class
    ++class_counts[static_cast<std::size_t>(static_cast<int>(k)) - 1];
  }

  BitString tape = encode_self_delimited(n);
  for (std::uint64_t c : class_counts) tape.append(encode_fixed(c, width));
  for (std::size_t i = 0; i < n; ++i) {
    tape.push_back((code[i] >> 1) & 1);
    tape.push_back(code[i] & 1);
  }
  return tape;
}

namespace {

class FourThirdsMachine {
 public:
  FourThirdsMachine(const FourThirdsParams& params, AdviceTape& tape)
      : eps_prime_(params.eps_prime()), tape_(tape) {
    std::uint64_t n = decode_header_value(tape_);
    if (n == kHeaderInconsistent || n > 100'000) {  // fuzz guard
      inconsistent_ = true;
      header_unusable_ = true;
      return;
    }
    int width = ceil_log2(BigInt(n) + 1);
    int grid = params.grid_size();
    std::map<Rat, int> approx_counts;
    std::uint64_t total = 0;
    for (int k = 1; k <= grid; ++k) {
      std::uint64_t count = tape_.read_fixed(width);
      total += count;
      if (count == 0) continue;
      Rat size = Rat(k) * eps_prime_;
      if (size > 1) size = 1;
      approx_counts[size] += static_cast<int>(count);
    }
    if (total > n) {  // more reservations than items: the tape lied
      inconsistent_ = true;
      header_unusable_ = true;
      return;
    }
    // Optimal packing of the approximate sizes; its slots hold reserved space
    // for large items that have not arrived yet.
    try {
      ConfigSolution solution = opt_configurations(approx_counts);
      for (const BinConfig& bin : solution.bins) {
        GoodBin gb;
        gb.bin = pb_.open_empty_bin();
        for (const auto& [size, mult] : bin) {
          gb.slots[size] = mult;
          gb.level += size * mult;
        }
        good_bins_.push_back(std::move(gb));
      }
    } catch (const ConfigurationExplosion&) {
      inconsistent_ = true;
      header_unusable_ = true;
      good_bins_.clear();
    }
  }

  void step(const Rat& item) {
    if (header_unusable_) {
      ff_over_all(pb_, item);
      return;
    }
    bool hi = tape_.read_bit();
    bool lo = tape_.read_bit();
    if (!hi && !lo) {
      step_good(item);
    } else if (!hi && lo) {
      // Bad type by size: > 1/2 gets its own bin, (1/4,1/2] goes to the
      // harmonic sub-strategy, the rest are tiny and go First-Fit.
      if (item > Rat(1, 2)) {
        pb_.place_next(kNewBin, item);
      } else if (item > Rat(1, 4)) {
        harmonic_.step(pb_, item);
      } else {
        tiny_.step(pb_, item);
      }
    } else if (hi && !lo) {
      pair_bins_.push_back(pb_.place_next(kNewBin, item));
    } else {
      int best = best_fit_among(pb_, pair_bins_, item);
      if (best == -1) {
        inconsistent_ = true;
        ff_over_all(pb_, item);
      } else {
        pb_.place_next(best, item);
      }
    }
  }

  PackingBuilder& builder() { return pb_; }
  bool inconsistent() const { return inconsistent_; }

 private:
  struct GoodBin {
    int bin = -1;
    Rat level;                 // reserved approximations + actual loads
    std::map<Rat, int> slots;  // unfilled reservations per approximate size
  };

  void step_good(const Rat& item) {
    if (item > Rat(1, 6)) {
      Rat cls = round_up_to_grid(item, eps_prime_);
      for (GoodBin& gb : good_bins_) {
        auto it = gb.slots.find(cls);
        if (it == gb.slots.end() || it->second == 0) continue;
        if (!pb_.fits(gb.bin, item)) break;  // tape lied about the class
        --it->second;
        pb_.place_next(gb.bin, item);
        gb.level += item - cls;  // reservation swapped for the actual size
        return;
      }
      inconsistent_ = true;
      ff_over_all(pb_, item);
      return;
    }
    // Small good items: First-Fit over levels, new good bin if none fits.
    for (GoodBin& gb : good_bins_) {
      if (gb.level + item > 1) continue;
      pb_.place_next(gb.bin, item);
      gb.level += item;
      return;
    }
    GoodBin gb;
    gb.bin = pb_.place_next(kNewBin, item);
    gb.level = item;
    good_bins_.push_back(std::move(gb));
  }

  Rat eps_prime_;
  AdviceTape& tape_;
  PackingBuilder pb_;
  std::vector<GoodBin> good_bins_;
  std::vector<int> pair_bins_;
  HarmonicType3 harmonic_;
  FirstFit tiny_;
  bool inconsistent_ = false;
  bool header_unusable_ = false;
};

}  // namespace

RunResult four_thirds_run(const RequestSequence& seq,
                          const FourThirdsParams& params, AdviceTape& tape) {
  check_four_thirds_params(params);
  FourThirdsMachine machine(params, tape);
  for (const Rat& item : seq) machine.step(item);
  return finish_run(machine.builder(), tape, machine.inconsistent());
}

}  // namespace advicepack
