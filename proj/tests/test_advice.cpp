#include "advicepack/advice.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace advicepack;
using testutil::seq_of;

namespace {

RunResult run_full_index(const RequestSequence& seq) {
  AdviceTape tape(full_index_oracle(seq));
  return full_index_run(seq, tape);
}

RunResult run_three_halves(const RequestSequence& seq) {
  AdviceTape tape(three_halves_oracle(seq));
  return three_halves_run(seq, tape);
}

std::vector<Rat> distinct_sizes(const RequestSequence& seq) {
  std::vector<Rat> u;
  for (const Rat& s : seq)
    if (std::find(u.begin(), u.end(), s) == u.end()) u.push_back(s);
  return u;
}

}  // namespace

// ------------------------------------------------------------------ FullIndex

TEST_CASE("full-index reproduces the optimum on the worked example") {
  auto seq = seq_of({"1/4", "1/8", "1/16", "1/32", "1/64",
                     "0.734375", "0.84375", "0.9375"});
  BitString tape_bits = full_index_oracle(seq);
  // header: unary 2 -> 3 bits; six 2-bit indices
  CHECK(tape_bits.size() == 15);
  CHECK(tape_bits.to_string().substr(0, 3) == "110");

  AdviceTape tape(tape_bits);
  RunResult run = full_index_run(seq, tape);
  CHECK(run.cost == 3);
  CHECK(run.advice_bits_read == 15);
  CHECK(run.advice_bits_read <= full_index_budget(8, 3));
  CHECK(!run.advice_inconsistent);
  CHECK(verify_packing(seq, run.packing));
}

TEST_CASE("full-index on tiny and empty sequences") {
  SUBCASE("two items in one bin") {
    auto seq = seq_of({"1/2", "1/2"});
    BitString bits = full_index_oracle(seq);
    CHECK(bits.to_string() == "0");  // X = 0
    AdviceTape tape(bits);
    RunResult run = full_index_run(seq, tape);
    CHECK(run.cost == 1);
    CHECK(run.advice_bits_read == 1);
  }
  SUBCASE("empty sequence reads the one-bit header") {
    RequestSequence seq;
    AdviceTape tape(full_index_oracle(seq));
    RunResult run = full_index_run(seq, tape);
    CHECK(run.cost == 0);
    CHECK(run.advice_bits_read == 1);
  }
}

TEST_CASE("full-index is optimal with budgeted bits on random instances") {
  testutil::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    auto seq = testutil::random_instance(rng, 1 + rng.below(12));
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.certified);
    RunResult run = run_full_index(seq);
    REQUIRE(run.cost == opt.cost);
    REQUIRE(!run.advice_inconsistent);
    REQUIRE(verify_packing(seq, run.packing));
    if (opt.cost >= 2)
      REQUIRE(run.advice_bits_read <= full_index_budget(seq.size(), opt.cost));
    else
      REQUIRE(run.advice_bits_read == 1);
  }
}

TEST_CASE("full-index decisions depend only on the past and the tape") {
  testutil::Rng rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = testutil::random_instance(rng, 10);
    auto b = a;
    for (std::size_t i = 6; i < b.size(); ++i) b[i] = Rat(1 + rng.below(63), 64);
    BitString bits = full_index_oracle(a);
    AdviceTape ta(bits), tb(bits);
    RunResult ra = full_index_run(a, ta);
    RunResult rb = full_index_run(b, tb);
    for (std::size_t i = 0; i < 6; ++i)
      REQUIRE(ra.trace[i].bin == rb.trace[i].bin);
  }
}

// ------------------------------------------------------------- DistinctReplay

TEST_CASE("distinct-replay matches the worked examples") {
  SUBCASE("two sizes") {
    auto seq = seq_of({"2/3", "1/3", "1/3", "2/3"});
    std::vector<Rat> universe = {rat(2, 3), rat(1, 3)};
    BitString bits = frequency_oracle(seq, universe);
    // X = ceil(log 5) = 3; e(3) = 2 + 2*2 + 1 = 7; counts 2x3 bits
    CHECK(bits.size() == distinct_replay_budget(4, 2));
    AdviceTape tape(bits);
    RunResult run = distinct_replay_run(seq, universe, tape);
    CHECK(run.cost == 2);
    CHECK(run.advice_bits_read == distinct_replay_budget(4, 2));
    CHECK(!run.advice_inconsistent);
    CHECK(verify_packing(seq, run.packing));
  }
  SUBCASE("four halves") {
    auto seq = seq_of({"1/2", "1/2", "1/2", "1/2"});
    std::vector<Rat> universe = {rat(1, 2)};
    AdviceTape tape(frequency_oracle(seq, universe));
    CHECK(distinct_replay_run(seq, universe, tape).cost == 2);
  }
  SUBCASE("capacity-12 instance as a six-size universe") {
    std::map<Rat, int> counts{{rat(1, 12), 15}, {rat(11, 12), 4},
                              {rat(10, 12), 2}, {rat(9, 12), 1},
                              {rat(8, 12), 1},  {rat(1), 7}};
    RequestSequence seq = expand_counts(counts);
    std::vector<Rat> universe;
    for (const auto& [size, unused] : counts) universe.push_back(size);
    AdviceTape tape(frequency_oracle(seq, universe));
    RunResult run = distinct_replay_run(seq, universe, tape);
    CHECK(run.cost == 15);
    CHECK(!run.advice_inconsistent);
  }
}

TEST_CASE("distinct-replay rejects items outside the universe") {
  auto seq = seq_of({"1/2", "1/3"});
  std::vector<Rat> universe = {rat(1, 2)};
  CHECK_THROWS_AS(frequency_oracle(seq, universe), UnknownSize);
  AdviceTape tape(frequency_oracle(seq_of({"1/2"}), universe));
  CHECK_THROWS_AS(distinct_replay_run(seq, universe, tape), UnknownSize);
  CHECK_THROWS_AS(
      frequency_oracle(seq_of({"1/2"}), {rat(1, 2), rat(1, 2)}), BadParams);
}

TEST_CASE("distinct-replay is optimal on random counted instances") {
  testutil::Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = 1 + rng.below(4);
    std::vector<Rat> universe;
    while (universe.size() < m) {
      Rat s(1 + rng.below(24), 24);
      if (std::find(universe.begin(), universe.end(), s) == universe.end())
        universe.push_back(s);
    }
    RequestSequence seq;
    for (std::size_t i = 0, n = 1 + rng.below(12); i < n; ++i)
      seq.push_back(universe[rng.below(universe.size())]);
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.certified);
    AdviceTape tape(frequency_oracle(seq, universe));
    RunResult run = distinct_replay_run(seq, universe, tape);
    REQUIRE(run.cost == opt.cost);
    REQUIRE(!run.advice_inconsistent);
    REQUIRE(run.advice_bits_read == distinct_replay_budget(seq.size(), m));
    REQUIRE(verify_packing(seq, run.packing));
  }
}

// ---------------------------------------------------------------- ThreeHalves

TEST_CASE("three-halves worked examples") {
  SUBCASE("one medium, one tiny, one large") {
    auto seq = seq_of({"0.55", "0.3", "0.7"});
    RunResult run = run_three_halves(seq);
    CHECK(run.cost == 2);
    CHECK(run.cost == opt_exact(seq).cost);
    CHECK(run.advice_bits_read == three_halves_budget(3));  // 2 + e(2) = 9
    CHECK(run.advice_bits_read == 9);
    // the tiny item joins the critical bin that holds 0.55
    CHECK(run.packing.assignment[1] == run.packing.assignment[0]);
  }
  SUBCASE("all-medium stream uses one critical bin each") {
    for (int k : {1, 3, 6}) {
      RequestSequence seq(k, rat(3, 5));
      RunResult run = run_three_halves(seq);
      CHECK(run.cost == k);
      CHECK(!run.advice_inconsistent);
    }
  }
  SUBCASE("empty sequence") {
    RunResult run = run_three_halves({});
    CHECK(run.cost == 0);
    CHECK(run.advice_bits_read == three_halves_budget(0));  // e(0) = 1
  }
}

TEST_CASE("three-halves holds its guarantee and invariants on random runs") {
  testutil::Rng rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    auto seq = testutil::random_instance(rng, 1 + rng.below(16));
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.certified);

    AdviceTape tape(three_halves_oracle(seq));
    ThreeHalvesMachine machine(tape);
    for (const Rat& item : seq) {
      machine.step(item);
      // virtual/actual inequalities after every step
      for (const auto& b : machine.bins()) {
        Rat actual = machine.builder().load(b.bin);
        REQUIRE(actual <= b.virtual_level);
        REQUIRE(b.virtual_level <= actual + Rat(2, 3));
        REQUIRE(b.virtual_level <= 1);
        // the 2/3 reservation holds until the medium item lands
        if (b.critical && !b.has_medium) REQUIRE(b.virtual_level >= Rat(2, 3));
      }
    }
    // critical bins precede all others
    bool seen_non_critical = false;
    for (const auto& b : machine.bins()) {
      if (!b.critical) seen_non_critical = true;
      if (seen_non_critical) REQUIRE(!b.critical);
    }
    REQUIRE(!machine.inconsistent());

    Packing packing = machine.builder().take_packing();
    REQUIRE(verify_packing(seq, packing));
    REQUIRE(2 * packing.cost() <= 3 * opt.cost + 6);  // cost <= 1.5 OPT + 3
    REQUIRE(tape.max_accessed() == three_halves_budget(seq.size()));
  }
}

TEST_CASE("three-halves online-ness under truncation") {
  testutil::Rng rng(113);
  auto seq = testutil::random_instance(rng, 14);
  BitString bits = three_halves_oracle(seq);
  AdviceTape full_tape(bits);
  RunResult full = three_halves_run(seq, full_tape);
  for (std::size_t k : {3u, 7u, 11u}) {
    RequestSequence prefix(seq.begin(), seq.begin() + k);
    AdviceTape tape(bits);  // same tape
    RunResult part = three_halves_run(prefix, tape);
    for (std::size_t i = 0; i < k; ++i)
      REQUIRE(part.trace[i].bin == full.trace[i].bin);
  }
}

TEST_CASE("three-halves survives a lying alpha") {
  auto seq = seq_of({"0.6", "0.6", "0.6"});
  // claim alpha = 1 though three mediums arrive
  BitString bits = encode_self_delimited(2);
  bits.append(encode_fixed(1, 2));
  AdviceTape tape(bits);
  RunResult run = three_halves_run(seq, tape);
  CHECK(run.advice_inconsistent);
  CHECK(verify_packing(seq, run.packing));
  CHECK(run.cost == 3);
}

// ----------------------------------------------------------------- PairPacker

TEST_CASE("pair packer worked examples") {
  SUBCASE("disjoint pairs") {
    auto seq = seq_of({"0.6", "0.7", "0.4", "0.3"});
    BitString bits = pair_packer_oracle(seq);
    CHECK(bits.to_string() == "0011");
    AdviceTape tape(bits);
    RunResult run = pair_packer_run(seq, tape);
    CHECK(run.cost == 2);
    CHECK(verify_packing(seq, run.packing));
  }
  SUBCASE("best fit remapping keeps the packing optimal") {
    auto seq = seq_of({"0.5", "0.6", "0.4", "0.5"});
    AdviceTape tape(BitString::from_string("0011"));
    RunResult run = pair_packer_run(seq, tape);
    CHECK(run.cost == 2);
    // BF sends 0.4 to the 0.6 bin (tightest), then 0.5 to the 0.5 bin
    CHECK(run.packing.assignment == std::vector<int>{0, 1, 1, 0});
  }
  SUBCASE("single pair") {
    auto seq = seq_of({"0.5", "0.5"});
    AdviceTape tape(pair_packer_oracle(seq));
    CHECK(pair_packer_run(seq, tape).cost == 1);
  }
}

TEST_CASE("pair packer rejects non-pair instances and infeasible advice") {
  CHECK_THROWS_AS(pair_packer_oracle(seq_of({"1/2"})), BadParams);
  // optimal packing is one bin of four items
  CHECK_THROWS_AS(pair_packer_oracle(seq_of({"1/4", "1/4", "1/4", "1/4"})),
                  BadParams);
  auto seq = seq_of({"0.9", "0.9"});
  AdviceTape tape(BitString::from_string("01"));
  CHECK_THROWS_AS(pair_packer_run(seq, tape), NoFeasibleBin);
}

// -------------------------------------------------------------- HarmonicType3

TEST_CASE("harmonic weights") {
  CHECK(harmonic_weight(rat(26, 100)) == rat(1, 3));
  CHECK(harmonic_weight(rat(35, 100)) == rat(1, 2));
  CHECK(harmonic_weight(rat(1, 3)) == rat(1, 3));
  CHECK(harmonic_weight(rat(1, 2)) == rat(1, 2));
  CHECK_THROWS_AS(harmonic_weight(rat(1, 4)), OutOfRange);
  CHECK_THROWS_AS(harmonic_weight(rat(3, 5)), OutOfRange);
}

TEST_CASE("harmonic packs pairs and triples class-wise") {
  SUBCASE("single item") {
    CHECK(harmonic_type3_run(seq_of({"0.3"})).cost == 1);
  }
  SUBCASE("k triples") {
    RequestSequence seq;
    for (int k = 0; k < 4; ++k) {
      seq.push_back(rat(2, 5));
      seq.push_back(rat(3, 10));
      seq.push_back(rat(3, 10));
    }
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.cost == 4);
    RunResult run = harmonic_type3_run(seq);
    CHECK(verify_packing(seq, run.packing));
    CHECK(3 * run.cost <= 4 * opt.cost + 9);  // cost <= 4/3 OPT + 3
  }
  SUBCASE("full bins carry weight at least 1") {
    testutil::Rng rng(127);
    RequestSequence seq;
    for (int i = 0; i < 12; ++i) {
      std::uint64_t q = 40;
      seq.push_back(Rat(11 + rng.below(9), q));  // (1/4, 1/2]
    }
    PackingBuilder pb;
    HarmonicType3 algo;
    for (const Rat& item : seq) algo.step(pb, item);
    for (int bin : algo.full_bins()) {
      Rat w = 0;
      for (std::size_t idx : pb.packing().bins[bin].items)
        w += harmonic_weight(seq[idx]);
      REQUIRE(w >= 1);
    }
  }
}

// ----------------------------------------------------------------- FourThirds

TEST_CASE("four-thirds parameters") {
  FourThirdsParams p{rat(1, 12)};
  CHECK(p.eps_prime() == rat(11, 720));
  CHECK(p.grid_size() == 66);
  CHECK(p.tiny_threshold() == rat(55, 720));
  CHECK(round_up_to_grid(rat(1, 2), p.eps_prime()) == rat(363, 720));
  CHECK(round_up_to_grid(rat(1), p.eps_prime()) == rat(1));
  CHECK(round_up_to_grid(rat(719, 720), p.eps_prime()) == rat(1));
  FourThirdsParams bad{rat(1, 11)};
  CHECK_THROWS_AS(four_thirds_oracle({}, bad), BadParams);
}

TEST_CASE("good/bad classification follows the sub-quarter mass rule") {
  auto seq = seq_of({"0.7", "0.3", "0.5", "0.3", "0.2"});
  OptResult opt = opt_exact(seq);
  REQUIRE(opt.cost == 2);
  GoodBadSplit split = classify_good_bad(seq, opt.witness, rat(11, 720));
  CHECK(split.good_bins + split.bad_bins == 2);
  // {0.7, 0.3} has no sub-quarter items at all -> bad
  // {0.5, 0.3, 0.2} carries 0.2 >= 55/720 -> good
  int good_with_02 = -1;
  for (std::size_t b = 0; b < opt.witness.bins.size(); ++b)
    for (std::size_t idx : opt.witness.bins[b].items)
      if (seq[idx] == rat(1, 5)) good_with_02 = static_cast<int>(b);
  REQUIRE(good_with_02 >= 0);
  CHECK(split.bin_is_good[good_with_02]);
}

TEST_CASE("four-thirds worked examples") {
  FourThirdsParams params{rat(1, 12)};
  SUBCASE("a single bad pair") {
    auto seq = seq_of({"0.7", "0.3"});
    BitString bits = four_thirds_oracle(seq, params);
    AdviceTape tape(bits);
    RunResult run = four_thirds_run(seq, params, tape);
    CHECK(run.cost == 1);
    CHECK(!run.advice_inconsistent);
    // per-item codes are 10 then 11 at the end of the tape
    std::string s = bits.to_string();
    CHECK(s.substr(s.size() - 4) == "1011");
  }
  SUBCASE("good bins round-trip through reserved slots") {
    auto seq = seq_of({"0.5", "0.3", "0.2", "0.5", "0.3", "0.2"});
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.cost == 2);
    AdviceTape tape(four_thirds_oracle(seq, params));
    RunResult run = four_thirds_run(seq, params, tape);
    CHECK(!run.advice_inconsistent);
    CHECK(verify_packing(seq, run.packing));
    CHECK(3 * run.cost <= (4 + 3 * to_double(params.epsilon)) * opt.cost + 9);
    CHECK(run.advice_bits_read ==
          four_thirds_header_bits(seq.size(), params) + 2 * seq.size());
  }
  SUBCASE("empty sequence") {
    AdviceTape tape(four_thirds_oracle({}, params));
    CHECK(four_thirds_run({}, params, tape).cost == 0);
  }
}

TEST_CASE("four-thirds guarantee on random instances") {
  FourThirdsParams params{rat(1, 12)};
  testutil::Rng rng(131);
  for (int trial = 0; trial < 25; ++trial) {
    auto seq = testutil::random_instance(rng, 1 + rng.below(12));
    OptResult opt = opt_exact(seq);
    REQUIRE(opt.certified);
    AdviceTape tape(four_thirds_oracle(seq, params));
    RunResult run = four_thirds_run(seq, params, tape);
    REQUIRE(!run.advice_inconsistent);
    REQUIRE(verify_packing(seq, run.packing));
    // cost <= (4/3 + eps) OPT + 3, exactly in rationals
    REQUIRE(Rat(run.cost) <=
            (Rat(4, 3) + params.epsilon) * opt.cost + 3);
    REQUIRE(run.advice_bits_read ==
            four_thirds_header_bits(seq.size(), params) + 2 * seq.size());
  }
}

TEST_CASE("four-thirds online-ness under truncation") {
  FourThirdsParams params{rat(1, 12)};
  testutil::Rng rng(137);
  auto seq = testutil::random_instance(rng, 12);
  BitString bits = four_thirds_oracle(seq, params);
  AdviceTape full_tape(bits);
  RunResult full = four_thirds_run(seq, params, full_tape);
  for (std::size_t k : {4u, 8u}) {
    RequestSequence prefix(seq.begin(), seq.begin() + k);
    AdviceTape tape(bits);
    RunResult part = four_thirds_run(prefix, params, tape);
    for (std::size_t i = 0; i < k; ++i)
      REQUIRE(part.trace[i].bin == full.trace[i].bin);
  }
}

// ------------------------------------------------------------------- Fuzzing

TEST_CASE("corrupted tapes terminate with valid packings") {
  testutil::Rng rng(139);
  FourThirdsParams params{rat(1, 12)};
  for (int trial = 0; trial < 60; ++trial) {
    auto seq = testutil::random_instance(rng, 1 + rng.below(10));
    BitString bits;
    std::size_t len = rng.below(200);
    for (std::size_t i = 0; i < len; ++i) bits.push_back(rng.below(2));

    {
      AdviceTape tape(bits);
      RunResult run = full_index_run(seq, tape);
      REQUIRE(verify_packing(seq, run.packing));
    }
    {
      AdviceTape tape(bits);
      RunResult run = three_halves_run(seq, tape);
      REQUIRE(verify_packing(seq, run.packing));
    }
    {
      AdviceTape tape(bits);
      RunResult run = four_thirds_run(seq, params, tape);
      REQUIRE(verify_packing(seq, run.packing));
    }
    {
      std::vector<Rat> universe = distinct_sizes(seq);
      AdviceTape tape(bits);
      RunResult run = distinct_replay_run(seq, universe, tape);
      REQUIRE(verify_packing(seq, run.packing));
    }
  }
}
