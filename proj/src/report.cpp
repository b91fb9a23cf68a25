#include "advicepack/report.hpp"

#include "advicepack/baselines.hpp"
#include "advicepack/oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ostream>

namespace advicepack {

namespace {

bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

Rat parse_epsilon(const std::string& name) {
  return parse_rational_or_throw(name.substr(std::string("four-thirds:").size()));
}

std::vector<Rat> universe_of(const RequestSequence& seq) {
  std::vector<Rat> universe;
  for (const Rat& s : seq)
    if (std::find(universe.begin(), universe.end(), s) == universe.end())
      universe.push_back(s);
  return universe;
}

}  // namespace

bool is_algorithm_name(const std::string& name) {
  return is_baseline_name(name) || name == "full-index" || name == "distinct" ||
         name == "three-halves" || name == "pair" ||
         has_prefix(name, "four-thirds:");
}

AlgoRun run_algorithm(const std::string& name, const RequestSequence& seq,
                      std::uint64_t opt_budget) {
  AlgoRun out;
  if (is_baseline_name(name)) {
    out.run = run_baseline(name, seq);
    return out;
  }
  out.has_tape = true;
  if (name == "full-index") {
    out.tape_bits = full_index_oracle(seq, opt_budget);
    AdviceTape tape(out.tape_bits);
    out.run = full_index_run(seq, tape);
  } else if (name == "distinct") {
    std::vector<Rat> universe = universe_of(seq);
    out.tape_bits = frequency_oracle(seq, universe);
    AdviceTape tape(out.tape_bits);
    out.run = distinct_replay_run(seq, universe, tape);
  } else if (name == "three-halves") {
    out.tape_bits = three_halves_oracle(seq);
    AdviceTape tape(out.tape_bits);
    out.run = three_halves_run(seq, tape);
  } else if (name == "pair") {
    out.tape_bits = pair_packer_oracle(seq, opt_budget);
    AdviceTape tape(out.tape_bits);
    out.run = pair_packer_run(seq, tape);
  } else if (has_prefix(name, "four-thirds:")) {
    FourThirdsParams params{parse_epsilon(name)};
    out.tape_bits = four_thirds_oracle(seq, params, opt_budget);
    AdviceTape tape(out.tape_bits);
    out.run = four_thirds_run(seq, params, tape);
  } else {
    throw BadParams("unknown algorithm '" + name + "'");
  }
  return out;
}

RunResult run_algorithm_with_tape(const std::string& name,
                                  const RequestSequence& seq,
                                  AdviceTape& tape) {
  if (is_baseline_name(name)) return run_baseline(name, seq);
  if (name == "full-index") return full_index_run(seq, tape);
  if (name == "distinct") return distinct_replay_run(seq, universe_of(seq), tape);
  if (name == "three-halves") return three_halves_run(seq, tape);
  if (name == "pair") return pair_packer_run(seq, tape);
  if (has_prefix(name, "four-thirds:"))
    return four_thirds_run(seq, FourThirdsParams{parse_epsilon(name)}, tape);
  throw BadParams("unknown algorithm '" + name + "'");
}

std::string ReportRow::ratio() const {
  if (!certified || opt == 0) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g",
                static_cast<double>(cost) / static_cast<double>(opt));
  return buf;
}

namespace {

// Advice budget and cost guarantee for one finished run, checked only when
// the optimum is certified.
std::string check_guarantees(const std::string& name, const ReportRow& row,
                             const RunResult& run) {
  if (run.advice_inconsistent)
    return "advice flagged inconsistent under an honest oracle";
  if (!row.certified) return "";
  std::size_t n = row.n;
  int opt = row.opt;

  if (name == "full-index") {
    if (row.cost != opt) return "full-index cost differs from OPT";
    if (opt >= 2 && row.advice_bits > full_index_budget(n, opt))
      return "full-index advice over budget";
    if (opt <= 1 && row.advice_bits != 1)
      return "full-index header should be one bit";
  } else if (name == "distinct") {
    if (row.cost != opt) return "distinct-replay cost differs from OPT";
  } else if (name == "three-halves") {
    if (2 * row.cost > 3 * opt + 6) return "three-halves bound violated";
    if (row.advice_bits != three_halves_budget(n))
      return "three-halves advice bits off";
  } else if (name == "pair") {
    if (row.cost != opt || 2 * row.cost != static_cast<int>(n))
      return "pair packing not optimal";
  } else if (has_prefix(name, "four-thirds:")) {
    FourThirdsParams params{parse_epsilon(name)};
    if (Rat(row.cost) > (Rat(4, 3) + params.epsilon) * opt + 3)
      return "four-thirds bound violated";
    if (row.advice_bits != four_thirds_header_bits(n, params) + 2 * n)
      return "four-thirds advice bits off";
  }
  return "";
}

}  // namespace

std::vector<ReportRow> run_matrix(const ExperimentConfig& config) {
  std::vector<ReportRow> rows;
  for (const auto& [id, seq] : config.instances) {
    OptResult opt = opt_exact(seq, config.opt_budget);
    for (const std::string& algo : config.algorithms) {
      ReportRow row;
      row.instance_id = id;
      row.n = seq.size();
      row.opt = opt.cost;
      row.certified = opt.certified;
      row.algorithm = algo;
      auto started = std::chrono::steady_clock::now();
      try {
        AlgoRun result = run_algorithm(algo, seq, config.opt_budget);
        row.cost = result.run.cost;
        row.advice_bits = result.run.advice_bits_read;
        if (result.run.advice_inconsistent) row.flags = "advice-inconsistent";
        std::vector<std::string> why;
        if (!verify_packing(seq, result.run.packing, &why))
          row.error = "invalid packing: " + why.front();
        else
          row.error = check_guarantees(algo, row, result.run);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      if (config.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        row.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "instance,n,opt,certified,algorithm,cost,ratio,advice_bits,flags,"
         "error,runtime_ms\n";
  for (const ReportRow& r : rows) {
    out << csv_escape(r.instance_id) << ',' << r.n << ',' << r.opt << ','
        << (r.certified ? 1 : 0) << ',' << csv_escape(r.algorithm) << ','
        << r.cost << ',' << r.ratio() << ',' << r.advice_bits << ','
        << csv_escape(r.flags) << ',' << csv_escape(r.error) << ','
        << r.runtime_ms << '\n';
  }
}

void write_report_json(const std::vector<ReportRow>& rows, std::ostream& out) {
  nlohmann::json doc = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    nlohmann::json row;
    row["instance"] = r.instance_id;
    row["n"] = r.n;
    row["opt"] = r.opt;
    row["certified"] = r.certified;
    row["algorithm"] = r.algorithm;
    row["cost"] = r.cost;
    row["ratio"] = r.ratio();
    row["advice_bits"] = r.advice_bits;
    row["flags"] = r.flags;
    row["error"] = r.error;
    row["runtime_ms"] = r.runtime_ms;
    doc.push_back(std::move(row));
  }
  out << doc.dump(2) << "\n";
}

bool any_failure(const std::vector<ReportRow>& rows) {
  for (const ReportRow& r : rows)
    if (!r.ok()) return true;
  return false;
}

}  // namespace advicepack
