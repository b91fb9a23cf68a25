#include "advicepack/advice.hpp"
#include "advicepack/generators.hpp"
#include "advicepack/instance_io.hpp"
#include "advicepack/lower_bounds.hpp"
#include "advicepack/oracle.hpp"
#include "advicepack/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace advicepack;

namespace {

std::uint64_t seed_override(std::uint64_t seed) {
  if (const char* env = std::getenv("ADVICEPACK_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw BadParams("ADVICEPACK_SEED is not a number");
    }
  }
  return seed;
}

std::vector<std::uint64_t> parse_levels(const std::string& text) {
  std::vector<std::uint64_t> levels;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    levels.push_back(std::stoull(part));
  return levels;
}

void emit_instance(const RequestSequence& seq, const std::string& out_path) {
  if (out_path.empty())
    write_instance_json(seq, std::cout);
  else
    write_instance_file(seq, out_path);
}

RequestSequence generate_kind(const std::string& kind, std::size_t n,
                              std::uint64_t seed, std::uint64_t max_den,
                              int k, int m, const std::string& levels,
                              const std::string& index) {
  if (kind == "uniform") return gen_uniform(n, seed, max_den);
  if (kind == "pairs") return gen_pairs(n, seed, max_den);
  if (kind == "triples") return gen_triples(n, seed, max_den);
  if (kind == "t1-family")
    return gen_theorem1_sequence(
        Theorem1Vector::from_tail_index(n, k, BigInt(index)));
  if (kind == "t2-family")
    return gen_theorem2_sequence(n, m, parse_levels(levels));
  throw BadParams("unknown kind '" + kind + "'");
}

std::vector<int> load_bits(const std::string& spec, std::size_t n) {
  if (spec.rfind("random:", 0) == 0) {
    std::uint64_t seed = seed_override(std::stoull(spec.substr(7)));
    return gen_bits(n, seed);
  }
  std::ifstream in(spec);
  if (!in) throw BadParams("cannot open bits file '" + spec + "'");
  std::vector<int> bits;
  char c;
  while (in.get(c)) {
    if (c == '0') bits.push_back(0);
    if (c == '1') bits.push_back(1);
  }
  return bits;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

int cmd_generate(const std::string& kind, std::size_t n, std::uint64_t seed,
                 std::uint64_t max_den, int k, int m, const std::string& levels,
                 const std::string& index, const std::string& out_path) {
  if (kind == "sgkh-bits") {
    std::vector<int> bits = gen_bits(n, seed_override(seed));
    std::ostringstream text;
    for (int b : bits) text << b;
    if (out_path.empty()) {
      std::cout << text.str() << "\n";
    } else {
      std::ofstream out(out_path);
      out << text.str() << "\n";
    }
    return 0;
  }
  emit_instance(generate_kind(kind, n, seed_override(seed), max_den, k, m,
                              levels, index),
                out_path);
  return 0;
}

int cmd_opt(const std::string& instance, std::uint64_t budget,
            const std::string& witness_path) {
  RequestSequence seq = read_instance_file(instance);
  OptResult result = opt_exact(seq, budget);
  std::cout << "cost " << result.cost << "\n"
            << "certified " << (result.certified ? "yes" : "no") << "\n"
            << "lower_bound " << result.lower_bound << "\n"
            << "nodes " << result.nodes << "\n";
  if (witness_path.empty()) {
    write_packing_json(result.witness, std::cout);
  } else {
    std::ofstream out(witness_path);
    write_packing_json(result.witness, out);
  }
  return result.certified ? 0 : 1;
}

int cmd_run(const std::string& algos_text, std::vector<std::string> instances,
            const std::string& gen_spec, int count, std::uint64_t budget,
            const std::string& csv_path, const std::string& json_path,
            bool timing, const std::string& tape_text, bool print_tape) {
  ExperimentConfig config;
  config.algorithms = split_csv(algos_text);
  config.opt_budget = budget;
  config.timing = timing;
  for (const std::string& algo : config.algorithms)
    if (!is_algorithm_name(algo)) throw BadParams("unknown algorithm '" + algo + "'");

  for (const std::string& path : instances)
    config.instances.emplace_back(path, read_instance_file(path));
  if (!gen_spec.empty()) {
    // kind:n:seed, expanded to `count` consecutive seeds
    auto parts = split_csv(gen_spec);  // reuse comma splitting? no: colon
    std::vector<std::string> fields;
    std::stringstream in(gen_spec);
    std::string part;
    while (std::getline(in, part, ':')) fields.push_back(part);
    if (fields.size() != 3) throw BadParams("--gen expects kind:n:seed");
    std::size_t n = std::stoull(fields[1]);
    std::uint64_t seed = seed_override(std::stoull(fields[2]));
    for (int i = 0; i < count; ++i) {
      RequestSequence seq =
          generate_kind(fields[0], n, seed + i, 64, 0, 0, "", "0");
      config.instances.emplace_back(
          fields[0] + ":" + std::to_string(n) + ":" + std::to_string(seed + i),
          seq);
    }
  }
  if (config.instances.empty()) throw BadParams("no instances given");

  if (!tape_text.empty()) {
    if (config.algorithms.size() != 1 || config.instances.size() != 1)
      throw BadParams("--tape replay needs exactly one algorithm and instance");
    AdviceTape tape = AdviceTape::deserialize(tape_text);
    RunResult run = run_algorithm_with_tape(config.algorithms[0],
                                            config.instances[0].second, tape);
    std::cout << "cost " << run.cost << "\n"
              << "advice_bits " << run.advice_bits_read << "\n"
              << "flags " << (run.advice_inconsistent ? "advice-inconsistent" : "")
              << "\n";
    write_packing_json(run.packing, std::cout);
    return 0;
  }

  if (print_tape) {
    if (config.algorithms.size() != 1 || config.instances.size() != 1)
      throw BadParams("--print-tape needs exactly one algorithm and instance");
    AlgoRun run = run_algorithm(config.algorithms[0],
                                config.instances[0].second, budget);
    AdviceTape tape(run.tape_bits);
    std::cout << tape.serialize() << "\n";
    return 0;
  }

  std::vector<ReportRow> rows = run_matrix(config);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    write_report_csv(rows, out);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    write_report_json(rows, out);
  }
  if (csv_path.empty() && json_path.empty()) write_report_csv(rows, std::cout);
  return any_failure(rows) ? 1 : 0;
}

int cmd_family_t1(std::size_t n, int k, const std::string& index, bool all,
                  bool count_only, const std::string& out_path) {
  if (count_only) {
    std::cout << theorem1_family_size(n, k) << "\n";
    return 0;
  }
  if (all) {
    BigInt size = theorem1_family_size(n, k);
    if (size > 10000)
      throw BadParams("family too large to list; use --index");
    for (BigInt i = 0; i < size; ++i) {
      Theorem1Vector vec = Theorem1Vector::from_tail_index(n, k, i);
      RequestSequence seq = gen_theorem1_sequence(vec);
      std::cout << i << " ";
      for (std::size_t j = 0; j < seq.size(); ++j)
        std::cout << (j ? " " : "") << to_fraction_string(seq[j]);
      std::cout << "\n";
    }
    return 0;
  }
  emit_instance(gen_theorem1_sequence(
                    Theorem1Vector::from_tail_index(n, k, BigInt(index))),
                out_path);
  return 0;
}

int cmd_reduce(const std::string& inner, const std::string& bits_spec,
               std::size_t n, const std::string& eps_min,
               const std::string& eps_max) {
  SeparationParams params;
  params.eps_min = parse_rational_or_throw(eps_min);
  params.eps_max = parse_rational_or_throw(eps_max);
  std::vector<int> bits = load_bits(bits_spec, n);
  GuessRun run = run_guessing_chain(bits, inner, params);
  Packing witness = SeparationFromBinPacking::canonical_witness(run.trace);
  bool witness_ok = verify_packing(run.trace.packed_items, witness) &&
                    witness.cost() == run.trace.opt;
  bool bound_ok = run.mistakes <= 4 * run.trace.extra_bins();
  std::cout << "bits " << bits.size() << "\n"
            << "mistakes " << run.mistakes << "\n"
            << "inner_cost " << run.trace.cost << "\n"
            << "opt " << run.trace.opt << "\n"
            << "extra_bins " << run.trace.extra_bins() << "\n"
            << "witness_ok " << (witness_ok ? "yes" : "no") << "\n"
            << "mistake_bound_ok " << (bound_ok ? "yes" : "no") << "\n";
  return witness_ok && bound_ok ? 0 : 1;
}

int cmd_bound(const std::string& c_text, const std::string& alpha_text,
              bool known_zeros, std::uint64_t n) {
  if (!c_text.empty()) {
    double c = to_double(parse_rational_or_throw(c_text));
    std::cout << "coefficient " << binpack_coefficient(c) << "\n"
              << "bound " << binpack_bound(c, n) << "\n";
    return 0;
  }
  if (!alpha_text.empty()) {
    double alpha = to_double(parse_rational_or_throw(alpha_text));
    double bound = known_zeros ? sgkh_bound_known_zeros(alpha, n)
                               : sgkh_bound(alpha, n);
    std::cout << "bound " << bound << "\n";
    return 0;
  }
  throw BadParams("need --c or --alpha");
}

int cmd_verify(const std::string& instance, const std::string& packing_path) {
  RequestSequence seq = read_instance_file(instance);
  Packing packing = read_packing_file(seq, packing_path);
  std::vector<std::string> why;
  if (verify_packing(seq, packing, &why)) {
    std::cout << "OK cost " << packing.cost() << "\n";
    return 0;
  }
  for (const std::string& violation : why)
    std::cout << "violation: " << violation << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online bin packing with advice: algorithms, families, bounds"};
  app.require_subcommand(1);

  // generate
  std::string g_kind = "uniform", g_levels, g_index = "0", g_out;
  std::size_t g_n = 10;
  std::uint64_t g_seed = 1, g_maxden = 64;
  int g_k = 1, g_m = 3;
  auto* generate = app.add_subcommand("generate", "write an instance file");
  generate->add_option("--kind", g_kind,
                       "uniform|pairs|triples|t1-family|t2-family|sgkh-bits");
  generate->add_option("--n", g_n);
  generate->add_option("--seed", g_seed);
  generate->add_option("--max-den", g_maxden);
  generate->add_option("--k", g_k);
  generate->add_option("--m", g_m);
  generate->add_option("--levels", g_levels, "comma separated a_1..a_{m-2}");
  generate->add_option("--index", g_index, "family member index");
  generate->add_option("-o,--out", g_out);

  // opt
  std::string o_instance, o_witness;
  std::uint64_t o_budget = kDefaultNodeBudget;
  auto* opt = app.add_subcommand("opt", "exact optimal packing");
  opt->add_option("instance", o_instance)->required();
  opt->add_option("--budget", o_budget, "search node budget");
  opt->add_option("--witness", o_witness, "write the witness packing here");

  // run
  std::string r_algos, r_gen, r_csv, r_json, r_tape;
  std::vector<std::string> r_instances;
  std::uint64_t r_budget = kDefaultNodeBudget;
  int r_count = 1;
  bool r_timing = false, r_print_tape = false;
  auto* run = app.add_subcommand("run", "run algorithms over instances");
  run->add_option("--algo", r_algos, "comma separated algorithm ids")
      ->required();
  run->add_option("--instance", r_instances, "instance files");
  run->add_option("--gen", r_gen, "kind:n:seed");
  run->add_option("--count", r_count, "instances generated from --gen");
  run->add_option("--budget", r_budget);
  run->add_option("--csv", r_csv);
  run->add_option("--json", r_json);
  run->add_flag("--timing", r_timing, "fill runtime_ms (report not replayable)");
  run->add_option("--tape", r_tape, "replay a serialized tape (len:hex)");
  run->add_flag("--print-tape", r_print_tape, "print the oracle tape and stop");

  // family
  auto* family = app.add_subcommand("family", "adversarial families");
  std::string f1_index = "0", f1_out;
  std::size_t f1_n = 8;
  int f1_k = 3;
  bool f1_all = false, f1_count = false;
  auto* t1 = family->add_subcommand("t1", "powers-of-two plus fillers");
  t1->add_option("--n", f1_n)->required();
  t1->add_option("--k", f1_k)->required();
  t1->add_option("--index", f1_index);
  t1->add_flag("--all", f1_all, "list every member");
  t1->add_flag("--count", f1_count, "print the family size");
  t1->add_option("-o,--out", f1_out);

  std::string f2_levels, f2_out;
  std::size_t f2_n = 30;
  int f2_m = 6;
  auto* t2 = family->add_subcommand("t2", "scaled capacity-2m family");
  t2->add_option("--n", f2_n)->required();
  t2->add_option("--m", f2_m)->required();
  t2->add_option("--levels", f2_levels)->required();
  t2->add_option("-o,--out", f2_out);
  family->require_subcommand(1);

  // reduce
  std::string rd_inner = "bf", rd_bits = "random:1";
  std::string rd_eps_min = "1/100", rd_eps_max = "1/10";
  std::size_t rd_n = 100;
  auto* reduce = app.add_subcommand("reduce", "bit guessing via bin packing");
  reduce->add_option("--inner", rd_inner, "advice-free baseline id");
  reduce->add_option("--bits", rd_bits, "bits file or random:SEED");
  reduce->add_option("--n", rd_n, "length for random bits");
  reduce->add_option("--eps-min", rd_eps_min);
  reduce->add_option("--eps-max", rd_eps_max);

  // bound
  std::string b_c, b_alpha;
  std::uint64_t b_n = 1000;
  bool b_known = false;
  auto* bound = app.add_subcommand("bound", "advice lower-bound evaluators");
  bound->add_option("--c", b_c, "competitive ratio, e.g. 17/16");
  bound->add_option("--alpha", b_alpha, "guessing accuracy, e.g. 3/4");
  bound->add_flag("--known-zeros", b_known);
  bound->add_option("--n", b_n);

  // verify
  std::string v_instance, v_packing;
  auto* verify = app.add_subcommand("verify", "check a packing file");
  verify->add_option("--instance", v_instance)->required();
  verify->add_option("--packing", v_packing)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return cmd_generate(g_kind, g_n, g_seed, g_maxden, g_k, g_m, g_levels,
                          g_index, g_out);
    if (opt->parsed()) return cmd_opt(o_instance, o_budget, o_witness);
    if (run->parsed())
      return cmd_run(r_algos, r_instances, r_gen, r_count, r_budget, r_csv,
                     r_json, r_timing, r_tape, r_print_tape);
    if (family->parsed()) {
      if (t1->parsed())
        return cmd_family_t1(f1_n, f1_k, f1_index, f1_all, f1_count, f1_out);
      emit_instance(gen_theorem2_sequence(f2_n, f2_m, parse_levels(f2_levels)),
                    f2_out);
      return 0;
    }
    if (reduce->parsed())
      return cmd_reduce(rd_inner, rd_bits, rd_n, rd_eps_min, rd_eps_max);
    if (bound->parsed()) return cmd_bound(b_c, b_alpha, b_known, b_n);
    if (verify->parsed()) return cmd_verify(v_instance, v_packing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
