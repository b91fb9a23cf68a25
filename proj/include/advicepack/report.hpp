#pragma once

#include "advicepack/advice.hpp"
#include "advicepack/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace advicepack {

// Algorithm ids: nf, ff, bf, harmonic:K, full-index, distinct, three-halves,
// four-thirds:EPS (EPS a fraction like 1/12), pair.
bool is_algorithm_name(const std::string& name);

struct AlgoRun {
  RunResult run;
  BitString tape_bits;  // advice written by the oracle; empty when advice-free
  bool has_tape = false;
};

// Runs with honest advice. The distinct universe is the instance's distinct
// sizes in first-appearance order.
AlgoRun run_algorithm(const std::string& name, const RequestSequence& seq,
                      std::uint64_t opt_budget = kDefaultNodeBudget);
// Replays against an externally supplied tape instead of the oracle's.
RunResult run_algorithm_with_tape(const std::string& name,
                                  const RequestSequence& seq,
                                  AdviceTape& tape);

struct ReportRow {
  std::string instance_id;
  std::size_t n = 0;
  int opt = 0;
  bool certified = false;
  std::string algorithm;
  int cost = 0;
  std::uint64_t advice_bits = 0;
  std::string flags;
  std::string error;  // run errors and guarantee violations
  std::int64_t runtime_ms = 0;

  std::string ratio() const;  // cost/opt, blank unless opt is certified
  bool ok() const { return error.empty(); }
};

struct ExperimentConfig {
  std::vector<std::string> algorithms;
  std::vector<std::pair<std::string, RequestSequence>> instances;
  std::uint64_t opt_budget = kDefaultNodeBudget;
  // Off by default so identical configs give byte-identical reports.
  bool timing = false;
};

// Every packing is re-verified before it is reported; advice budgets and the
// per-algorithm guarantees are checked whenever the optimum is certified.
std::vector<ReportRow> run_matrix(const ExperimentConfig& config);

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void write_report_json(const std::vector<ReportRow>& rows, std::ostream& out);
bool any_failure(const std::vector<ReportRow>& rows);

}  // namespace advicepack
