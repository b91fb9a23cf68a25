#include "advicepack/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace advicepack {

namespace {

int ceil_rat(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r > 0) ++q;
  return static_cast<int>(q);
}

struct ExactSearch {
  const std::vector<Rat>* sizes;     // sorted non-increasing
  const std::vector<std::size_t>* original;  // sorted position -> item index
  int cap;                           // max items per bin, 0 = unlimited
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::vector<Rat> loads;
  std::vector<int> fill;             // items per bin
  std::vector<int> where;            // sorted position -> bin
  std::vector<Rat> suffix_total;     // sum of sizes from position i on

  int best_cost = 0;
  std::vector<int> best_where;

  void run_ffd_incumbent() {
    std::vector<Rat> ff_loads;
    std::vector<int> ff_fill;
    best_where.resize(sizes->size());
    for (std::size_t i = 0; i < sizes->size(); ++i) {
      int placed = -1;
      for (std::size_t b = 0; b < ff_loads.size(); ++b) {
        if (ff_loads[b] + (*sizes)[i] <= 1 && (cap == 0 || ff_fill[b] < cap)) {
          placed = static_cast<int>(b);
          break;
        }
      }
      if (placed < 0) {
        ff_loads.push_back(0);
        ff_fill.push_back(0);
        placed = static_cast<int>(ff_loads.size()) - 1;
      }
      ff_loads[placed] += (*sizes)[i];
      ff_fill[placed] += 1;
      best_where[i] = placed;
    }
    best_cost = static_cast<int>(ff_loads.size());
  }

  int material_bound(std::size_t pos, int used) const {
    Rat remaining = suffix_total[pos];
    Rat free = 0;
    for (int b = 0; b < used; ++b) free += Rat(1) - loads[b];
    if (remaining <= free) return used;
    return used + ceil_rat(remaining - free);
  }

  void dfs(std::size_t pos, int used) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (pos == sizes->size()) {
      if (used < best_cost) {
        best_cost = used;
        best_where.assign(where.begin(), where.end());
      }
      return;
    }
    if (material_bound(pos, used) >= best_cost) return;

    const Rat& size = (*sizes)[pos];

    // Perfect fill is safe to commit to: a later set packed into this residual
    // can be swapped with the item without changing the cost. The swap may
    // move several items into the other bin, so it is sound only without a
    // per-bin item cap.
    if (cap == 0) {
      for (int b = 0; b < used; ++b) {
        if (loads[b] + size == 1) {
          loads[b] += size;
          fill[b] += 1;
          where[pos] = b;
          dfs(pos + 1, used);
          loads[b] -= size;
          fill[b] -= 1;
          return;
        }
      }
    }

    std::vector<Rat> tried;
    for (int b = 0; b < used; ++b) {
      if (loads[b] + size > 1 || (cap != 0 && fill[b] >= cap)) continue;
      if (std::find(tried.begin(), tried.end(), loads[b]) != tried.end())
        continue;
      tried.push_back(loads[b]);
      loads[b] += size;
      fill[b] += 1;
      where[pos] = b;
      dfs(pos + 1, used);
      loads[b] -= size;
      fill[b] -= 1;
      if (exhausted) return;
    }

    if (used + 1 < best_cost) {
      loads[used] = size;
      fill[used] = 1;
      where[pos] = used;
      dfs(pos + 1, used + 1);
      loads[used] = 0;
      fill[used] = 0;
    }
  }
};

OptResult opt_exact_impl(const RequestSequence& seq, int cap,
                         std::uint64_t node_budget) {
  for (const Rat& s : seq)
    if (!is_item_size(s)) throw BadParams("item size outside (0,1]");

  OptResult result;
  if (seq.empty()) {
    result.certified = true;
    return result;
  }

  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seq[a] > seq[b]; });
  std::vector<Rat> sorted(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) sorted[i] = seq[order[i]];

  ExactSearch search;
  search.sizes = &sorted;
  search.original = &order;
  search.cap = cap;
  search.budget = node_budget;
  search.loads.assign(seq.size(), Rat(0));
  search.fill.assign(seq.size(), 0);
  search.where.assign(seq.size(), -1);
  search.suffix_total.assign(seq.size() + 1, Rat(0));
  for (std::size_t i = seq.size(); i-- > 0;)
    search.suffix_total[i] = search.suffix_total[i + 1] + sorted[i];

  search.run_ffd_incumbent();

  int root_lb = ceil_rat(search.suffix_total[0]);
  int bigs = 0;
  for (const Rat& s : seq)
    if (2 * s > 1) ++bigs;
  root_lb = std::max(root_lb, bigs);
  if (cap != 0)
    root_lb = std::max(
        root_lb,
        static_cast<int>((seq.size() + cap - 1) / static_cast<std::size_t>(cap)));

  if (root_lb < search.best_cost) search.dfs(0, 0);

  result.cost = search.best_cost;
  result.nodes = search.nodes;
  result.certified = !search.exhausted;
  result.lower_bound = result.certified ? search.best_cost : root_lb;

  for (std::size_t i = 0; i < seq.size(); ++i) {
    int bin = search.best_where[i];
    while (bin >= static_cast<int>(result.witness.bins.size()))
      result.witness.bins.push_back(Bin{});
    place(result.witness, bin, order[i], seq[order[i]]);
  }
  return result;
}

}  // namespace

OptResult opt_exact(const RequestSequence& seq, std::uint64_t node_budget) {
  return opt_exact_impl(seq, 0, node_budget);
}

OptResult opt_exact_capped(const RequestSequence& seq, int max_items_per_bin,
                           std::uint64_t node_budget) {
  if (max_items_per_bin < 1) throw BadParams("bin item cap must be positive");
  return opt_exact_impl(seq, max_items_per_bin, node_budget);
}

RequestSequence expand_counts(const std::map<Rat, int>& size_counts) {
  RequestSequence seq;
  for (const auto& [size, count] : size_counts) {
    if (count < 0) throw BadParams("negative count");
    for (int i = 0; i < count; ++i) seq.push_back(size);
  }
  return seq;
}

namespace {

struct ConfigSearch {
  std::vector<Rat> sizes;             // ascending (map order)
  std::vector<int> demand;
  std::vector<std::vector<int>> configs;
  std::map<std::vector<int>, std::pair<int, int>> memo;  // remaining -> (cost, config)
  std::size_t state_guard = 0;
  static constexpr int kInf = 1 << 29;

  void enumerate(std::size_t guard) {
    std::vector<int> current(sizes.size(), 0);
    Rat load = 0;
    enumerate_from(0, current, load, guard);
  }

  void enumerate_from(std::size_t i, std::vector<int>& current, Rat& load,
                      std::size_t guard) {
    if (i == sizes.size()) {
      bool empty = std::all_of(current.begin(), current.end(),
                               [](int c) { return c == 0; });
      if (!empty) {
        configs.push_back(current);
        if (configs.size() > guard)
          throw ConfigurationExplosion("more than " + std::to_string(guard) +
                                       " feasible bin configurations");
      }
      return;
    }
    for (int k = 0;; ++k) {
      if (k > demand[i]) break;
      Rat added = load + Rat(k) * sizes[i];
      if (added > 1) break;
      current[i] = k;
      Rat saved = load;
      load = added;
      enumerate_from(i + 1, current, load, guard);
      load = saved;
    }
    current[i] = 0;
  }

  int solve(std::vector<int>& remaining) {
    if (std::all_of(remaining.begin(), remaining.end(),
                    [](int c) { return c == 0; }))
      return 0;
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second.first;
    if (memo.size() > state_guard)
      throw ConfigurationExplosion("cover search exceeded " +
                                   std::to_string(state_guard) + " states");

    std::size_t first = 0;
    while (remaining[first] == 0) ++first;

    int best = kInf, best_config = -1;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const auto& config = configs[c];
      if (config[first] == 0) continue;
      bool feasible = true;
      for (std::size_t i = 0; i < config.size(); ++i)
        if (config[i] > remaining[i]) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      for (std::size_t i = 0; i < config.size(); ++i) remaining[i] -= config[i];
      int sub = solve(remaining);
      for (std::size_t i = 0; i < config.size(); ++i) remaining[i] += config[i];
      if (sub + 1 < best) {
        best = sub + 1;
        best_config = static_cast<int>(c);
      }
    }
    memo[remaining] = {best, best_config};
    return best;
  }
};

}  // namespace

ConfigSolution opt_configurations(const std::map<Rat, int>& size_counts,
                                  std::size_t config_guard) {
  ConfigSearch search;
  for (const auto& [size, count] : size_counts) {
    if (!is_item_size(size)) throw BadParams("size outside (0,1]");
    if (count < 0) throw BadParams("negative count");
    if (count == 0) continue;
    search.sizes.push_back(size);
    search.demand.push_back(count);
  }
  ConfigSolution solution;
  if (search.sizes.empty()) return solution;

  search.enumerate(config_guard);
  search.state_guard = config_guard;
  std::vector<int> remaining = search.demand;
  solution.cost = search.solve(remaining);

  // Rebuild the chosen configurations from the memo.
  while (!std::all_of(remaining.begin(), remaining.end(),
                      [](int c) { return c == 0; })) {
    auto [cost, config_idx] = search.memo.at(remaining);
    (void)cost;
    const auto& config = search.configs[config_idx];
    BinConfig bin;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (config[i] == 0) continue;
      bin.emplace_back(search.sizes[i], config[i]);
      remaining[i] -= config[i];
    }
    solution.bins.push_back(std::move(bin));
  }
  return solution;
}

Packing config_witness_packing(const ConfigSolution& solution,
                               const std::map<Rat, int>& size_counts) {
  RequestSequence expanded = expand_counts(size_counts);
  std::map<Rat, std::vector<std::size_t>> pool;
  for (std::size_t i = 0; i < expanded.size(); ++i)
    pool[expanded[i]].push_back(i);
  std::map<Rat, std::size_t> next;

  Packing packing;
  for (const BinConfig& bin : solution.bins) {
    int target = kNewBin;
    for (const auto& [size, mult] : bin) {
      for (int k = 0; k < mult; ++k) {
        std::size_t idx = pool.at(size).at(next[size]++);
        target = place(packing, target, idx, size);
      }
    }
  }
  return packing;
}

namespace {

struct EnumerateSearch {
  const RequestSequence* seq;
  int target_cost;
  std::size_t limit;
  std::vector<Rat> loads;
  std::vector<std::vector<std::size_t>> bins;
  std::vector<Packing>* out;
  std::vector<Rat> suffix_total;

  void dfs(std::size_t pos, int used) {
    if (pos == seq->size()) {
      if (used == target_cost) {
        Packing p;
        for (int b = 0; b < used; ++b)
          for (std::size_t idx : bins[b]) place(p, b == static_cast<int>(p.bins.size()) ? kNewBin : b, idx, (*seq)[idx]);
        if (out->size() >= limit)
          throw LimitExceeded("more than " + std::to_string(limit) +
                              " optimal packings");
        out->push_back(std::move(p));
      }
      return;
    }
    // Material bound against the fixed target.
    Rat remaining = suffix_total[pos];
    Rat free = 0;
    for (int b = 0; b < used; ++b) free += Rat(1) - loads[b];
    if (remaining > free) {
      Rat overflow = remaining - free;
      BigInt extra = numerator(overflow) / denominator(overflow);
      if (extra * denominator(overflow) != numerator(overflow)) ++extra;
      if (used + static_cast<int>(extra) > target_cost) return;
    }

    const Rat& size = (*seq)[pos];
    for (int b = 0; b < used; ++b) {
      if (loads[b] + size > 1) continue;
      loads[b] += size;
      bins[b].push_back(pos);
      dfs(pos + 1, used);
      bins[b].pop_back();
      loads[b] -= size;
    }
    if (used < target_cost) {
      loads[used] = size;
      bins[used].push_back(pos);
      dfs(pos + 1, used + 1);
      bins[used].pop_back();
      loads[used] = 0;
    }
  }
};

}  // namespace

std::vector<Packing> enumerate_optimal_packings(const RequestSequence& seq,
                                                std::size_t limit) {
  std::vector<Packing> out;
  if (seq.empty()) {
    out.push_back(Packing{});
    return out;
  }
  OptResult opt = opt_exact(seq);
  if (!opt.certified)
    throw BudgetExhausted("cannot enumerate without a certified optimum");

  EnumerateSearch search;
  search.seq = &seq;
  search.target_cost = opt.cost;
  search.limit = limit;
  search.loads.assign(seq.size(), Rat(0));
  search.bins.assign(seq.size(), {});
  search.out = &out;
  search.suffix_total.assign(seq.size() + 1, Rat(0));
  for (std::size_t i = seq.size(); i-- > 0;)
    search.suffix_total[i] = search.suffix_total[i + 1] + seq[i];
  search.dfs(0, 0);
  return out;
}

}  // namespace advicepack
