#include "advicepack/lower_bounds.hpp"

#include "advicepack/oracle.hpp"
#include "advicepack/tape.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <cmath>

using namespace advicepack;
using testutil::seq_of;

TEST_CASE("family-one sequence reproduces the filler values") {
  Theorem1Vector vec{8, 3, {1, 2, 3, 2, 1}};
  RequestSequence seq = gen_theorem1_sequence(vec);
  REQUIRE(seq.size() == 8);
  CHECK(seq[0] == rat(1, 4));
  CHECK(seq[4] == rat(1, 64));
  CHECK(seq[5] == parse_rational_or_throw("0.734375"));
  CHECK(seq[6] == parse_rational_or_throw("0.84375"));
  CHECK(seq[7] == parse_rational_or_throw("0.9375"));

  Packing canonical = theorem1_canonical_packing(vec);
  CHECK(verify_packing(seq, canonical));
  CHECK(canonical.cost() == 3);
  for (const Bin& b : canonical.bins) CHECK(b.load == 1);
}

TEST_CASE("family-one validation") {
  CHECK_THROWS_AS(gen_theorem1_sequence(Theorem1Vector{8, 3, {1, 2, 2, 2, 1}}),
                  InvalidVector);
  CHECK_THROWS_AS(gen_theorem1_sequence(Theorem1Vector{8, 3, {1, 2, 3, 4, 1}}),
                  InvalidVector);
  CHECK_THROWS_AS(gen_theorem1_sequence(Theorem1Vector{8, 5, {1, 2, 3}}),
                  InvalidVector);
  CHECK_THROWS_AS(Theorem1Vector::from_tail_index(8, 3, 9), InvalidVector);
}

TEST_CASE("family-one enumeration: size, shared prefix, unique optimum") {
  CHECK(theorem1_family_size(8, 3) == 9);
  CHECK(theorem1_family_size(10, 1) == 1);

  RequestSequence first;
  for (BigInt idx = 0; idx < 9; ++idx) {
    Theorem1Vector vec = Theorem1Vector::from_tail_index(8, 3, idx);
    RequestSequence seq = gen_theorem1_sequence(vec);
    if (idx == 0) first = seq;
    // all members share the first n - k items
    for (std::size_t i = 0; i < 5; ++i) REQUIRE(seq[i] == first[i]);

    OptResult opt = opt_exact(seq);
    REQUIRE(opt.certified);
    REQUIRE(opt.cost == 3);
    auto all = enumerate_optimal_packings(seq, 50);
    REQUIRE(all.size() == 1);
  }
}

TEST_CASE("family-two reproduces both scaled worked sequences") {
  SUBCASE("levels (4,2,1,1)") {
    RequestSequence seq = gen_theorem2_sequence(30, 6, {4, 2, 1, 1});
    REQUIRE(seq.size() == 30);
    auto expect = seq_of({"11/12", "11/12", "11/12", "11/12", "10/12",
                          "10/12", "9/12", "8/12"});
    for (std::size_t i = 0; i < 15; ++i) REQUIRE(seq[i] == rat(1, 12));
    for (std::size_t i = 0; i < 8; ++i) REQUIRE(seq[15 + i] == expect[i]);
    for (std::size_t i = 23; i < 30; ++i) REQUIRE(seq[i] == 1);

    Packing canonical = theorem2_canonical_packing(30, 6, {4, 2, 1, 1});
    CHECK(verify_packing(seq, canonical));
    CHECK(canonical.cost() == 15);
    for (const Bin& b : canonical.bins) CHECK(b.load == 1);
  }
  SUBCASE("levels (7,0,0,2)") {
    RequestSequence seq = gen_theorem2_sequence(30, 6, {7, 0, 0, 2});
    int elevens = 0, eights = 0, twelves = 0;
    for (const Rat& s : seq) {
      if (s == rat(11, 12)) ++elevens;
      if (s == rat(8, 12)) ++eights;
      if (s == rat(1)) ++twelves;
    }
    CHECK(elevens == 7);
    CHECK(eights == 2);
    CHECK(twelves == 6);
    Packing canonical = theorem2_canonical_packing(30, 6, {7, 0, 0, 2});
    CHECK(verify_packing(seq, canonical));
    CHECK(canonical.cost() == 15);
  }
  SUBCASE("degenerate: every ones-bin at level 1") {
    RequestSequence seq = gen_theorem2_sequence(12, 4, {6, 0});
    int full_size = 0;
    for (const Rat& s : seq)
      if (s == 1) ++full_size;
    CHECK(full_size == 0);  // B = n/2 leaves no size-1 items
    CHECK(theorem2_canonical_packing(12, 4, {6, 0}).cost() == 6);
  }
}

TEST_CASE("family-two validation") {
  CHECK_THROWS_AS(gen_theorem2_sequence(30, 6, {4, 2, 1}), InvalidLevels);
  CHECK_THROWS_AS(gen_theorem2_sequence(30, 6, {4, 2, 1, 2}), InvalidLevels);
  CHECK_THROWS_AS(gen_theorem2_sequence(31, 6, {4, 2, 1, 1}), InvalidLevels);
  CHECK_THROWS_AS(gen_theorem2_sequence(30, 2, {}), InvalidLevels);
}

TEST_CASE("partition solution counting matches hand enumeration") {
  CHECK(count_partition_solutions(2, 6) == 4);
  CHECK(count_partition_solutions(3, 6) == 7);
  CHECK(count_partition_solutions(1, 5) == 1);
  CHECK(partition_bound(2, 6) == 3);
  CHECK(partition_bound(3, 6) == 4);
  CHECK(partition_bound(1, 5) == 1);
}

TEST_CASE("counting lemma holds on the divisible grid") {
  for (int alpha = 1; alpha <= 6; ++alpha) {
    std::uint64_t step = static_cast<std::uint64_t>(alpha) * (alpha + 1) / 2;
    for (std::uint64_t x = step; x <= 60; x += step) {
      Rat bound = partition_bound(alpha, x);
      Rat count(BigInt(count_partition_solutions(alpha, x)));
      REQUIRE(count >= bound);
    }
  }
}

TEST_CASE("probe shrink function is decreasing with the right range") {
  SeparationParams params;
  Rat prev;
  bool first = true;
  for (int i = 1; i <= 20; ++i) {
    Rat tau(i, 7);
    Rat f = probe_shrink(tau, params);
    CHECK(f > params.eps_min);
    CHECK(f < params.eps_max);
    if (!first) CHECK(f < prev);
    prev = f;
    first = false;
  }
  // probe item sizes are increasing in tau
  CHECK(Rat(1, 2) - probe_shrink(rat(1, 3), params) <
        Rat(1, 2) - probe_shrink(rat(2, 3), params));
  CHECK_THROWS_AS(probe_shrink(rat(1, 2), SeparationParams{rat(1, 5), rat(1, 4)}),
                  InvalidParams);
  CHECK_THROWS_AS(probe_shrink(rat(-1, 2), SeparationParams{}), InvalidParams);
}

TEST_CASE("reduction chain end to end with Best-Fit inside") {
  testutil::Rng rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.below(40);
    std::vector<int> bits;
    for (std::size_t i = 0; i < n; ++i)
      bits.push_back(static_cast<int>(rng.below(2)));

    GuessRun run = run_guessing_chain(bits, "bf");
    REQUIRE(run.trace.steps.size() == n);
    REQUIRE(run.trace.packed_items.size() == 2 * n);

    // coupling: bit-guess correctness == class-guess correctness
    for (std::size_t t = 0; t < n; ++t) {
      bool class_correct =
          run.trace.steps[t].guessed_large == run.trace.steps[t].actual_large;
      REQUIRE(class_correct == (run.guesses[t] == bits[t]));
      REQUIRE(run.trace.steps[t].mistake == !class_correct);
    }
    REQUIRE(run.mistakes == run.trace.mistakes());

    // the constructed instance's optimum is n: verified witness + counting
    Packing witness =
        SeparationFromBinPacking::canonical_witness(run.trace);
    REQUIRE(verify_packing(run.trace.packed_items, witness));
    REQUIRE(witness.cost() == static_cast<int>(n));
    int over_half = 0;
    for (const Rat& item : run.trace.packed_items)
      if (2 * item > 1) ++over_half;
    REQUIRE(over_half == static_cast<int>(n));
    REQUIRE(run.trace.opt == static_cast<int>(n));

    // mistake accounting against the inner algorithm's extra bins
    REQUIRE(run.mistakes <= 4 * run.trace.extra_bins());
  }
}

TEST_CASE("reduction instance optimum certified exactly at small n") {
  testutil::Rng rng(223);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t n = 2 + rng.below(9);
    std::vector<int> bits;
    for (std::size_t i = 0; i < n; ++i)
      bits.push_back(static_cast<int>(rng.below(2)));
    GuessRun run = run_guessing_chain(bits, "bf");
    OptResult opt = opt_exact(run.trace.packed_items);
    REQUIRE(opt.certified);
    REQUIRE(opt.cost == static_cast<int>(n));
  }
}

TEST_CASE("guessing interval stays ordered and the midpoints stay inside") {
  std::vector<int> bits{0, 1, 1, 0, 1, 0, 0, 1, 1, 1};
  std::size_t zeros = 0;
  for (int b : bits)
    if (b == 0) ++zeros;
  SeparationFromBinPacking separation(make_baseline("ff"), zeros);
  GuessingFromSeparation guesser(separation);
  for (int actual : bits) {
    guesser.guess_bit();
    Rat mid = (guesser.small() + guesser.large()) / 2;
    REQUIRE(guesser.small() < mid);
    REQUIRE(mid < guesser.large());
    guesser.reveal_bit(actual);
    REQUIRE(guesser.small() < guesser.large());
  }
}

TEST_CASE("algorithm-one trace on bits 01") {
  // mid_1 = 1/2 guessed via the separation oracle; bit 0 makes large = 1/2,
  // so mid_2 = 1/4.
  struct Scripted final : SeparationOracle {
    std::vector<Rat> seen;
    bool classify_is_large(const Rat& value) override {
      seen.push_back(value);
      return true;
    }
    void reveal(bool) override {}
  } oracle;
  GuessingFromSeparation guesser(oracle);
  guesser.guess_bit();
  guesser.reveal_bit(0);
  guesser.guess_bit();
  guesser.reveal_bit(1);
  REQUIRE(oracle.seen.size() == 2);
  CHECK(oracle.seen[0] == rat(1, 2));
  CHECK(oracle.seen[1] == rat(1, 4));
}

TEST_CASE("a cheating separation oracle yields zero mistakes") {
  testutil::Rng rng(227);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 1 + rng.below(50);
    std::vector<int> bits;
    for (std::size_t i = 0; i < n; ++i)
      bits.push_back(static_cast<int>(rng.below(2)));

    struct Cheat final : SeparationOracle {
      const std::vector<int>* bits;
      std::size_t at = 0;
      bool classify_is_large(const Rat&) override {
        return (*bits)[at++] == 0;
      }
      void reveal(bool) override {}
    } cheat;
    cheat.bits = &bits;

    GuessingFromSeparation guesser(cheat);
    int mistakes = 0;
    for (int actual : bits) {
      if (guesser.guess_bit() != actual) ++mistakes;
      guesser.reveal_bit(actual);
    }
    REQUIRE(mistakes == 0);
  }
}

TEST_CASE("bound evaluators") {
  CHECK(binpack_coefficient(9.0 / 8.0) == 0.0);
  CHECK(binpack_coefficient(17.0 / 16.0) ==
        doctest::Approx(0.188722).epsilon(1e-4));
  CHECK(sgkh_bound(0.75, 1000) == doctest::Approx(188.722).epsilon(1e-4));
  CHECK(sgkh_bound(0.5, 1000) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sgkh_bound_known_zeros(0.75, 1000) ==
        doctest::Approx(188.722 - static_cast<double>(advice_e_length(1000)))
            .epsilon(1e-3));
  // the theorem's bound halves the coefficient term
  CHECK(binpack_bound(17.0 / 16.0, 1000) ==
        doctest::Approx((1000 * 0.1887218755 - advice_e_length(1000)) / 2)
            .epsilon(1e-6));
  CHECK_THROWS_AS(sgkh_bound(0.3, 10), DomainError);
  CHECK_THROWS_AS(sgkh_bound(1.0, 10), DomainError);
  CHECK_THROWS_AS(binpack_coefficient(1.0), DomainError);
  CHECK_THROWS_AS(binpack_coefficient(1.2), DomainError);
}
