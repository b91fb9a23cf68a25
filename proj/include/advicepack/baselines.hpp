#pragma once

#include "advicepack/model.hpp"

#include <memory>
#include <string>
#include <vector>

namespace advicepack {

// Classic advice-free strategies as online step machines. Each one also works
// as a sub-strategy over its own subset of bins in a shared packing, so the
// bin lists below hold global bin ids.

struct NextFit {
  int open_bin = -1;
  int step(PackingBuilder& pb, const Rat& size);
};

struct FirstFit {
  std::vector<int> bins;  // in opening order
  int step(PackingBuilder& pb, const Rat& size);
};

struct BestFit {
  std::vector<int> bins;
  int step(PackingBuilder& pb, const Rat& size);
  // Feasible bin with the smallest residual, ties to the lowest bin index;
  // -1 when nothing fits.
  int find_best(const PackingBuilder& pb, const Rat& size) const;
};

struct Harmonic {
  explicit Harmonic(int K);
  int K;
  std::vector<NextFit> classes;
  int step(PackingBuilder& pb, const Rat& size);
  // Type i (1..K-1) holds sizes in (1/(i+1), 1/i]; type K holds (0, 1/K].
  static int type_of(const Rat& size, int K);
};

// Uniform handle used by the harness and the reduction driver.
class OnlineStepper {
 public:
  virtual ~OnlineStepper() = default;
  virtual int step(PackingBuilder& pb, const Rat& size) = 0;
};

// Accepts "nf", "ff", "bf", "harmonic:K". Throws BadParams otherwise.
std::unique_ptr<OnlineStepper> make_baseline(const std::string& name);
bool is_baseline_name(const std::string& name);

RunResult run_baseline(const std::string& name, const RequestSequence& seq);

}  // namespace advicepack
