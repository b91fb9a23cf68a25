#include "advicepack/baselines.hpp"

#include <cassert>

namespace advicepack {

int NextFit::step(PackingBuilder& pb, const Rat& size) {
  if (open_bin >= 0 && pb.fits(open_bin, size))
    return pb.place_next(open_bin, size);
  open_bin = pb.place_next(kNewBin, size);
  return open_bin;
}

int FirstFit::step(PackingBuilder& pb, const Rat& size) {
  for (int bin : bins)
    if (pb.fits(bin, size)) return pb.place_next(bin, size);
  // FF property: a new bin is opened only when the item fits nowhere earlier.
  int bin = pb.place_next(kNewBin, size);
  bins.push_back(bin);
  return bin;
}

int BestFit::find_best(const PackingBuilder& pb, const Rat& size) const {
  int best = -1;
  for (int bin : bins) {
    if (!pb.fits(bin, size)) continue;
    if (best == -1 || pb.load(bin) > pb.load(best)) best = bin;
  }
  return best;
}

int BestFit::step(PackingBuilder& pb, const Rat& size) {
  int bin = find_best(pb, size);
  if (bin >= 0) return pb.place_next(bin, size);
  bin = pb.place_next(kNewBin, size);
  bins.push_back(bin);
  return bin;
}

Harmonic::Harmonic(int K) : K(K), classes(K) {
  if (K < 1) throw BadParams("harmonic needs K >= 1");
}

int Harmonic::type_of(const Rat& size, int K) {
  if (!is_item_size(size)) throw OutOfRange("harmonic item outside (0,1]");
  // size in (1/(i+1), 1/i]  <=>  i = floor(1/size), clamped to K.
  BigInt t = denominator(size) / numerator(size);
  if (t >= K) return K;
  return static_cast<int>(t);
}

int Harmonic::step(PackingBuilder& pb, const Rat& size) {
  int type = type_of(size, K);
  return classes[type - 1].step(pb, size);
}

namespace {

template <typename Algo>
class StepperAdapter final : public OnlineStepper {
 public:
  explicit StepperAdapter(Algo algo) : algo_(std::move(algo)) {}
  int step(PackingBuilder& pb, const Rat& size) override {
    return algo_.step(pb, size);
  }

 private:
  Algo algo_;
};

}  // namespace

std::unique_ptr<OnlineStepper> make_baseline(const std::string& name) {
  if (name == "nf") return std::make_unique<StepperAdapter<NextFit>>(NextFit{});
  if (name == "ff")
    return std::make_unique<StepperAdapter<FirstFit>>(FirstFit{});
  if (name == "bf") return std::make_unique<StepperAdapter<BestFit>>(BestFit{});
  if (name.rfind("harmonic:", 0) == 0) {
    int K = 0;
    try {
      K = std::stoi(name.substr(9));
    } catch (const std::exception&) {
      throw BadParams("bad harmonic parameter in '" + name + "'");
    }
    return std::make_unique<StepperAdapter<Harmonic>>(Harmonic(K));
  }
  throw BadParams("unknown baseline '" + name + "'");
}

bool is_baseline_name(const std::string& name) {
  return name == "nf" || name == "ff" || name == "bf" ||
         name.rfind("harmonic:", 0) == 0;
}

RunResult run_baseline(const std::string& name, const RequestSequence& seq) {
  auto algo = make_baseline(name);
  PackingBuilder pb;
  for (const Rat& item : seq) algo->step(pb, item);
  RunResult result;
  result.trace = pb.take_trace();
  result.packing = pb.take_packing();
  result.cost = result.packing.cost();
  return result;
}

}  // namespace advicepack
