#include "advicepack/lower_bounds.hpp"

#include "advicepack/tape.hpp"

#include <cmath>

namespace advicepack {

// ------------------------------------------------------------- family one

namespace {

void check_theorem1(const Theorem1Vector& vec) {
  std::size_t n = vec.n;
  int k = vec.k;
  if (k < 1 || static_cast<std::size_t>(k) > n - 1 ||
      2 * static_cast<std::size_t>(k) > n)
    throw InvalidVector("need 1 <= k <= n-1 and 2k <= n");
  if (vec.v.size() != n - static_cast<std::size_t>(k))
    throw InvalidVector("vector length must be n-k");
  for (std::size_t i = 0; i < vec.v.size(); ++i) {
    if (vec.v[i] < 1 || vec.v[i] > k)
      throw InvalidVector("entries must lie in 1..k");
    if (i < static_cast<std::size_t>(k) && vec.v[i] != static_cast<int>(i) + 1)
      throw InvalidVector("the first k entries must be 1,2,...,k");
  }
}

Rat power_of_two_item(std::size_t i) {  // a_i = 1/2^{i+1}, 1-based
  BigInt den = BigInt(1) << (i + 1);
  return Rat(BigInt(1), den);
}

}  // namespace

BigInt theorem1_family_size(std::size_t n, int k) {
  if (k < 1 || 2 * static_cast<std::size_t>(k) > n)
    throw InvalidVector("need 1 <= k and 2k <= n");
  BigInt size = 1;
  for (std::size_t i = 0; i < n - 2 * static_cast<std::size_t>(k); ++i)
    size *= k;
  return size;
}

Theorem1Vector Theorem1Vector::from_tail_index(std::size_t n, int k,
                                               const BigInt& index) {
  if (index < 0 || index >= theorem1_family_size(n, k))
    throw InvalidVector("tail index out of range");
  Theorem1Vector vec;
  vec.n = n;
  vec.k = k;
  for (int j = 1; j <= k; ++j) vec.v.push_back(j);
  std::size_t tail = n - 2 * static_cast<std::size_t>(k);
  std::vector<int> digits(tail, 0);
  BigInt rest = index;
  for (std::size_t d = 0; d < tail; ++d) {
    digits[tail - 1 - d] = static_cast<int>(rest % k);
    rest /= k;
  }
  for (int d : digits) vec.v.push_back(d + 1);
  return vec;
}

RequestSequence gen_theorem1_sequence(const Theorem1Vector& vec) {
  check_theorem1(vec);
  std::size_t small_count = vec.n - static_cast<std::size_t>(vec.k);
  RequestSequence seq;
  seq.reserve(vec.n);
  for (std::size_t i = 1; i <= small_count; ++i)
    seq.push_back(power_of_two_item(i));
  for (int j = 1; j <= vec.k; ++j) {
    Rat filler = 1;
    for (std::size_t i = 0; i < small_count; ++i)
      if (vec.v[i] == j) filler -= seq[i];
    seq.push_back(filler);
  }
  return seq;
}

Packing theorem1_canonical_packing(const Theorem1Vector& vec) {
  RequestSequence seq = gen_theorem1_sequence(vec);
  std::size_t small_count = vec.n - static_cast<std::size_t>(vec.k);
  Packing packing;
  for (int j = 0; j < vec.k; ++j) packing.bins.push_back(Bin{});
  for (std::size_t i = 0; i < small_count; ++i)
    place(packing, vec.v[i] - 1, i, seq[i]);
  for (int j = 0; j < vec.k; ++j)
    place(packing, j, small_count + j, seq[small_count + j]);
  return packing;
}

// ------------------------------------------------------------- family two

namespace {

void check_theorem2(std::size_t n, int m,
                    const std::vector<std::uint64_t>& levels) {
  if (m < 3) throw InvalidLevels("need m >= 3");
  if (n % 2 != 0 || n == 0) throw InvalidLevels("need even n > 0");
  if (levels.size() != static_cast<std::size_t>(m) - 2)
    throw InvalidLevels("need exactly m-2 level counts");
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    weighted += (i + 1) * levels[i];
  if (weighted != n / 2)
    throw InvalidLevels("level counts must satisfy sum i*a_i = n/2");
}

}  // namespace

RequestSequence gen_theorem2_sequence(std::size_t n, int m,
                                      const std::vector<std::uint64_t>& levels) {
  check_theorem2(n, m, levels);
  BigInt den = 2 * m;
  RequestSequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < n / 2; ++i) seq.push_back(Rat(BigInt(1), den));
  std::uint64_t filled_bins = 0;
  // fillers in non-increasing size order = increasing level order
  for (std::size_t level = 1; level <= levels.size(); ++level) {
    for (std::uint64_t c = 0; c < levels[level - 1]; ++c) {
      seq.push_back(Rat(den - BigInt(level), den));
      ++filled_bins;
    }
  }
  for (std::uint64_t i = filled_bins; i < n / 2; ++i) seq.push_back(Rat(1));
  return seq;
}

Packing theorem2_canonical_packing(std::size_t n, int m,
                                   const std::vector<std::uint64_t>& levels) {
  RequestSequence seq = gen_theorem2_sequence(n, m, levels);
  Packing packing;
  std::size_t ones = n / 2;
  std::size_t next_one = 0;
  std::size_t item = ones;  // first filler
  for (std::size_t level = 1; level <= levels.size(); ++level) {
    for (std::uint64_t c = 0; c < levels[level - 1]; ++c) {
      int bin = place(packing, kNewBin, item, seq[item]);
      ++item;
      for (std::size_t u = 0; u < level; ++u) {
        place(packing, bin, next_one, seq[next_one]);
        ++next_one;
      }
    }
  }
  for (; item < n; ++item) place(packing, kNewBin, item, seq[item]);
  return packing;
}

// -------------------------------------------------------- counting lemma

std::uint64_t count_partition_solutions(int alpha, std::uint64_t x) {
  if (alpha < 1) throw BadParams("alpha must be >= 1");
  // Enumeration guard: ~alpha * x states in the recursion below.
  if (static_cast<std::uint64_t>(alpha) * (x + 1) > 10'000'000)
    throw BadParams("count_partition_solutions input too large");
  // Brute force over x_alpha, x_{alpha-1}, ..., letting x_1 absorb the rest.
  std::uint64_t count = 0;
  struct Frame {
    int coeff;
    std::uint64_t remaining;
  };
  std::vector<Frame> todo{{alpha, x}};
  while (!todo.empty()) {
    Frame f = todo.back();
    todo.pop_back();
    if (f.coeff == 1) {
      ++count;  // x_1 = remaining
      continue;
    }
    for (std::uint64_t v = 0; v * f.coeff <= f.remaining; ++v)
      todo.push_back(
          {f.coeff - 1, f.remaining - v * static_cast<std::uint64_t>(f.coeff)});
  }
  return count;
}

Rat partition_bound(int alpha, std::uint64_t x) {
  if (alpha < 1) throw BadParams("alpha must be >= 1");
  Rat base = 1 + Rat(2 * BigInt(x), BigInt(alpha) * (alpha + 1));
  Rat bound = 1;
  for (int i = 0; i < alpha - 1; ++i) bound *= base;
  return bound;
}

// -------------------------------------------------------- reduction chain

Rat probe_shrink(const Rat& tau, const SeparationParams& params) {
  if (!(params.eps_min > 0 && params.eps_min < params.eps_max &&
        params.eps_max < Rat(1, 6)))
    throw InvalidParams("need 0 < eps_min < eps_max < 1/6");
  if (tau <= 0) throw InvalidParams("probe values must be positive");
  // eps_min + (eps_max - eps_min) / (1 + tau): strictly decreasing in tau,
  // range inside (eps_min, eps_max).
  return params.eps_min + (params.eps_max - params.eps_min) / (1 + tau);
}

int ReductionTrace::mistakes() const {
  int count = 0;
  for (const ReductionStep& s : steps)
    if (s.mistake) ++count;
  return count;
}

SeparationFromBinPacking::SeparationFromBinPacking(
    std::unique_ptr<OnlineStepper> inner, std::size_t n_large,
    SeparationParams params)
    : inner_(std::move(inner)), params_(params) {
  probe_shrink(Rat(1), params_);  // validates the parameters
  Rat opener = Rat(1, 2) + params_.eps_min;
  for (std::size_t i = 0; i < n_large; ++i) {
    trace_.packed_items.push_back(opener);
    int bin = inner_->step(pb_, opener);
    while (opener_bin_.size() <= static_cast<std::size_t>(bin))
      opener_bin_.push_back(false);
    opener_bin_[bin] = true;
  }
}

bool SeparationFromBinPacking::classify_is_large(const Rat& value) {
  if (pending_guess_)
    throw BadParams("classify called twice without a reveal");
  Rat probe = Rat(1, 2) - probe_shrink(value, params_);
  trace_.packed_items.push_back(probe);
  int bin = inner_->step(pb_, probe);
  while (opener_bin_.size() <= static_cast<std::size_t>(bin))
    opener_bin_.push_back(false);
  last_guess_ = opener_bin_[bin];  // packed with a 1/2+eps_min item?
  pending_guess_ = true;
  return last_guess_;
}

void SeparationFromBinPacking::reveal(bool actual_large) {
  if (!pending_guess_) throw BadParams("reveal without a pending guess");
  pending_guess_ = false;
  ReductionStep step;
  step.guessed_large = last_guess_;
  step.actual_large = actual_large;
  step.mistake = step.guessed_large != step.actual_large;
  trace_.steps.push_back(step);
  if (!actual_large)
    small_probes_.push_back(trace_.packed_items.back());
}

ReductionTrace SeparationFromBinPacking::finish() {
  if (pending_guess_) throw BadParams("finish with a pending guess");
  for (const Rat& small : small_probes_) {
    Rat complement = Rat(1) - small;
    trace_.packed_items.push_back(complement);
    inner_->step(pb_, complement);
  }
  trace_.cost = pb_.packing().cost();
  trace_.opt = static_cast<int>(trace_.steps.size());
  return trace_;
}

Packing SeparationFromBinPacking::canonical_witness(
    const ReductionTrace& trace) {
  // Pair each large probe with an opener, each small probe with its
  // complement. Complements appear after all probes, in small-probe order.
  std::size_t n = trace.steps.size();
  std::size_t n_large = 0;
  for (const ReductionStep& s : trace.steps)
    if (s.actual_large) ++n_large;
  const RequestSequence& items = trace.packed_items;

  Packing packing;
  std::size_t next_opener = 0;
  std::size_t next_complement = n_large + n;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t probe_index = n_large + t;
    if (trace.steps[t].actual_large) {
      int bin = place(packing, kNewBin, next_opener, items[next_opener]);
      place(packing, bin, probe_index, items[probe_index]);
      ++next_opener;
    } else {
      int bin = place(packing, kNewBin, probe_index, items[probe_index]);
      place(packing, bin, next_complement, items[next_complement]);
      ++next_complement;
    }
  }
  return packing;
}

GuessingFromSeparation::GuessingFromSeparation(SeparationOracle& solver)
    : solver_(solver) {}

int GuessingFromSeparation::guess_bit() {
  if (pending_) throw BadParams("guess_bit called twice without a reveal");
  // Any value strictly inside (small, large) works; take the midpoint.
  mid_ = (small_ + large_) / 2;
  bool is_large = solver_.classify_is_large(mid_);
  pending_ = true;
  return is_large ? 0 : 1;  // class "large" means bit 0
}

void GuessingFromSeparation::reveal_bit(int actual) {
  if (!pending_) throw BadParams("reveal without a pending guess");
  pending_ = false;
  bool actual_large = actual == 0;
  solver_.reveal(actual_large);
  if (actual_large)
    large_ = mid_;  // "large" is the correct class for this value
  else
    small_ = mid_;
}

GuessRun run_guessing_chain(const std::vector<int>& bits,
                            const std::string& inner_name,
                            SeparationParams params) {
  std::size_t zeros = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw BadParams("bits must be 0 or 1");
    if (b == 0) ++zeros;
  }
  SeparationFromBinPacking separation(make_baseline(inner_name), zeros,
                                      params);
  GuessingFromSeparation guesser(separation);
  GuessRun run;
  for (int actual : bits) {
    int guess = guesser.guess_bit();
    run.guesses.push_back(guess);
    if (guess != actual) ++run.mistakes;
    guesser.reveal_bit(actual);
  }
  run.trace = separation.finish();
  return run;
}

// ------------------------------------------------------- bound evaluators

namespace {

double xlog2(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double sgkh_bound(double alpha, std::uint64_t n) {
  if (!(alpha >= 0.5 && alpha < 1.0))
    throw DomainError("sgkh bound needs 1/2 <= alpha < 1");
  double coeff = 1.0 + xlog2(1.0 - alpha) + xlog2(alpha);
  return coeff * static_cast<double>(n);
}

double sgkh_bound_known_zeros(double alpha, std::uint64_t n) {
  return sgkh_bound(alpha, n) - static_cast<double>(advice_e_length(n));
}

double binpack_coefficient(double c) {
  if (!(c > 1.0 && c <= 1.125))
    throw DomainError("binpack bound needs 1 < c <= 9/8");
  return 1.0 + xlog2(4.0 * c - 4.0) + xlog2(5.0 - 4.0 * c);
}

double binpack_bound(double c, std::uint64_t n) {
  return (static_cast<double>(n) * binpack_coefficient(c) -
          static_cast<double>(advice_e_length(n))) /
         2.0;
}

}  // namespace advicepack
