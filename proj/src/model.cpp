#include "advicepack/model.hpp"

#include <algorithm>
#include <sstream>

namespace advicepack {

int Packing::cost() const {
  int c = 0;
  for (const Bin& b : bins)
    if (!b.items.empty()) ++c;
  return c;
}

int place(Packing& packing, int target, std::size_t index, const Rat& size) {
  int bin;
  if (target == kNewBin) {
    packing.bins.push_back(Bin{});
    bin = static_cast<int>(packing.bins.size()) - 1;
  } else {
    if (target < 0 || target >= static_cast<int>(packing.bins.size()))
      throw BadParams("place: no such bin " + std::to_string(target));
    bin = target;
  }
  Bin& b = packing.bins[bin];
  if (b.load + size > 1) {
    std::ostringstream msg;
    msg << "item #" << index << " of size " << to_fraction_string(size)
        << " into bin " << bin << " with load " << to_fraction_string(b.load);
    throw OverflowRejected(msg.str());
  }
  b.items.push_back(index);
  b.load += size;
  if (packing.assignment.size() <= index) packing.assignment.resize(index + 1, -1);
  packing.assignment[index] = bin;
  return bin;
}

bool verify_packing(const RequestSequence& seq, const Packing& packing,
                    std::vector<std::string>* violations) {
  std::vector<std::string> local;
  auto fail = [&](const std::string& what) { local.push_back(what); };

  std::vector<int> seen(seq.size(), 0);
  for (std::size_t bi = 0; bi < packing.bins.size(); ++bi) {
    const Bin& b = packing.bins[bi];
    Rat sum = 0;
    for (std::size_t idx : b.items) {
      if (idx >= seq.size()) {
        fail("bin " + std::to_string(bi) + " references item #" +
             std::to_string(idx) + " outside the sequence");
        continue;
      }
      ++seen[idx];
      sum += seq[idx];
    }
    if (sum != b.load)
      fail("bin " + std::to_string(bi) + " load field " +
           to_fraction_string(b.load) + " != sum of contents " +
           to_fraction_string(sum));
    if (sum > 1)
      fail("bin " + std::to_string(bi) + " overflows: load " +
           to_fraction_string(sum));
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seen[i] == 0) fail("item #" + std::to_string(i) + " unassigned");
    if (seen[i] > 1)
      fail("item #" + std::to_string(i) + " assigned " +
           std::to_string(seen[i]) + " times");
  }
  bool ok = local.empty();
  if (violations) *violations = std::move(local);
  return ok;
}

Packing replay_trace(const RequestSequence& seq,
                     const std::vector<StepDecision>& trace) {
  if (trace.size() != seq.size())
    throw BadParams("replay_trace: trace length != sequence length");
  Packing packing;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const StepDecision& d = trace[i];
    if (d.bin < 0) throw BadParams("replay_trace: negative bin in trace");
    // Reserved bins are created up front by some algorithms, so a decision may
    // target an index past the bins opened by items alone.
    while (d.bin >= static_cast<int>(packing.bins.size()))
      packing.bins.push_back(Bin{});
    place(packing, d.bin, i, seq[i]);
  }
  return packing;
}

int PackingBuilder::place_next(int target, const Rat& size) {
  bool opened = target == kNewBin;
  int bin = place(packing_, target, next_index_, size);
  trace_.push_back(StepDecision{bin, opened});
  ++next_index_;
  return bin;
}

int PackingBuilder::open_empty_bin() {
  packing_.bins.push_back(Bin{});
  return static_cast<int>(packing_.bins.size()) - 1;
}

}  // namespace advicepack
