#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixfair/errors.hpp"
#include "mixfair/flow.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/log.hpp"
#include "mixfair/objective.hpp"
#include "mixfair/oracle.hpp"
#include "mixfair/partition.hpp"
#include "mixfair/solver.hpp"

namespace {

using nlohmann::json;
using namespace mixfair;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

json utilities_json(const UtilityVector& u) {
  json a = json::array();
  for (const Rat& v : u) a.push_back(rat_to_string(v));
  return a;
}

json blocks_json(const std::vector<std::vector<int>>& blocks) {
  json a = json::array();
  for (const auto& b : blocks) a.push_back(b);
  return a;
}

json solve_like_json(const UtilityVector& utilities,
                     const std::optional<Rat>& value,
                     const Allocation& alloc, long long candidates) {
  json out;
  out["utilities"] = utilities_json(utilities);
  out["objective_value"] = value ? json(rat_to_string(*value)) : json(nullptr);
  out["allocation"] = json::parse(serialize_allocation(alloc));
  out["candidates_examined"] = candidates;
  return out;
}

struct Options {
  std::string input = "-";
  std::string output;
  std::string objective;
  std::string allocation_path;
  std::string target_path;
  std::string indivisible_target_path;
  std::string divisible_target_path;
  std::string dump_network_path;
  std::string dm_path = "-";
  std::string gen_kind = "random";
  std::string tol = "1/100000000";
  unsigned long long seed = 0;
  long long cap_assignments = 0;  // 0: library default
  bool allow_oracle = false;
  bool continuous = false;
  bool mixed_divisible = false;
  int min_agents = 2;
  int max_agents = 6;
  int max_indivisible = 6;
  int max_divisible = 4;
};

OracleLimits limits_from(const Options& opt) {
  OracleLimits limits;
  if (opt.cap_assignments > 0) limits.cap_assignments = opt.cap_assignments;
  return limits;
}

int run_solve(const Options& opt) {
  Instance inst = parse_instance(read_input(opt.input));
  Objective obj = parse_objective(opt.objective);
  json out;
  try {
    SolveResult r = solve(inst, obj);
    out = solve_like_json(r.utilities, r.objective_value, r.allocation,
                          r.candidates_examined);
  } catch (const HardInstanceError& e) {
    if (!opt.allow_oracle) throw;
    log::info(std::string("falling back to the oracle: ") + e.what());
    OracleResult r = brute_force_optimal(inst, obj, limits_from(opt));
    out = solve_like_json(r.utilities, r.objective_value, r.allocation,
                          r.candidates_examined);
  }
  write_output(opt.output, out);
  return 0;
}

int run_partition(const Options& opt) {
  Instance inst = parse_instance(read_input(opt.input));
  CoverageFn f = coverage_all(inst);
  CanonicalPartition cp = canonical_partition(f);
  PrincipalPartition pp = principal_partition(f);
  json out;
  out["canonical"]["blocks"] = blocks_json(cp.blocks);
  out["canonical"]["values"] = json::array();
  for (const Int& b : cp.values)
    out["canonical"]["values"].push_back(b.str());
  out["principal"]["blocks"] = blocks_json(pp.blocks);
  out["principal"]["values"] = json::array();
  for (const Rat& l : pp.values)
    out["principal"]["values"].push_back(rat_to_string(l));
  out["zbar"] = utilities_json(relaxed_minimizer(inst));
  write_output(opt.output, out);
  return 0;
}

int run_realize(const Options& opt) {
  Instance inst = parse_instance(read_input(opt.input));
  const bool has_m = !inst.indivisible.empty();
  const bool has_c = !inst.divisible.empty();
  Allocation alloc;
  if (has_m && has_c) {
    if (opt.indivisible_target_path.empty() ||
        opt.divisible_target_path.empty())
      throw HardInstanceError(
          "checking whether a bare utility vector is achievable on a mixed "
          "instance is intractable in general; pass --indivisible-target and "
          "--divisible-target to realize a known split");
    UtilityVector um =
        parse_utilities(read_input(opt.indivisible_target_path));
    UtilityVector uc = parse_utilities(read_input(opt.divisible_target_path));
    Allocation am = realize_from_utilities(inst, RealizeKind::Indivisible, um);
    Allocation ac = realize_from_utilities(inst, RealizeKind::Divisible, uc);
    alloc.relaxed = am.relaxed || ac.relaxed;
    for (const auto& [key, share] : am.shares)
      alloc.add(key.first, key.second, share);
    for (const auto& [key, share] : ac.shares)
      alloc.add(key.first, key.second, share);
  } else {
    if (opt.target_path.empty())
      throw ParseError("realize needs --target with a utilities JSON file");
    UtilityVector u = parse_utilities(read_input(opt.target_path));
    alloc = realize_from_utilities(
        inst, has_c ? RealizeKind::Divisible : RealizeKind::Indivisible, u);
  }
  write_output(opt.output, json::parse(serialize_allocation(alloc)));
  return 0;
}

int run_verify(const Options& opt) {
  Instance inst = parse_instance(read_input(opt.input));
  Allocation alloc = parse_allocation(read_input(opt.allocation_path));
  std::vector<std::string> violations = validate_allocation(inst, alloc);
  std::vector<std::string> structure;
  bool proximity = false;
  json out;
  if (violations.empty()) {
    structure = check_structure(inst, alloc);
    UtilityVector u = utility_vector(inst, alloc);
    proximity = check_proximity_utilities(relaxed_minimizer(inst), u);
    out["utilities"] = utilities_json(u);
  }
  out["violations"] = violations;
  out["structure"] = structure;
  out["proximity"] = proximity;
  bool ok = violations.empty() && structure.empty() && proximity;
  out["valid"] = ok;
  write_output(opt.output, out);
  if (!ok) throw InfeasibleError("allocation failed verification");
  return 0;
}

int run_oracle(const Options& opt) {
  Instance inst = parse_instance(read_input(opt.input));
  if (opt.continuous) {
    Objective obj = parse_objective(opt.objective);
    ContinuousMinResult r =
        continuous_min(inst, obj, rat_from_string(opt.tol));
    json out;
    out["utilities"] = utilities_json(r.utilities);
    out["gap"] = rat_to_string(r.gap);
    out["gap_float"] = static_cast<double>(numerator(r.gap)) /
                       static_cast<double>(denominator(r.gap));
    out["iterations"] = r.iterations;
    write_output(opt.output, out);
    return 0;
  }
  Objective obj = parse_objective(opt.objective);
  OracleResult r = brute_force_optimal(inst, obj, limits_from(opt));
  write_output(opt.output, solve_like_json(r.utilities, r.objective_value,
                                           r.allocation,
                                           r.candidates_examined));
  return 0;
}

int run_gen(const Options& opt) {
  json out;
  if (opt.gen_kind == "random") {
    std::mt19937_64 rng(opt.seed);
    RandomSpec spec;
    spec.min_agents = opt.min_agents;
    spec.max_agents = opt.max_agents;
    spec.max_indivisible = opt.max_indivisible;
    spec.max_divisible = opt.max_divisible;
    spec.identical_divisible = !opt.mixed_divisible;
    out = json::parse(serialize_instance(random_instance(rng, spec)));
  } else if (opt.gen_kind == "hardness-profile" ||
             opt.gen_kind == "hardness-vector") {
    ThreeDM dm = parse_3dm(read_input(opt.dm_path));
    HardnessReduction red = opt.gen_kind == "hardness-profile"
                                ? gen_3dm_hardness(dm)
                                : gen_realization_hardness(dm);
    out["instance"] = json::parse(serialize_instance(red.instance));
    out["target"] = utilities_json(red.target);
    out["profile"] = red.profile;
  } else {
    throw ParseError("unknown gen kind: " + opt.gen_kind);
  }
  write_output(opt.output, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fair division of mixed divisible/indivisible goods"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "instance JSON path, - for stdin");
    cmd->add_option("--output", opt.output, "output path, - or empty for stdout");
    cmd->add_option("--dump-network", opt.dump_network_path,
                    "append every flow network as Graphviz dot to this file");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "compute a fair allocation");
  add_io(solve_cmd);
  solve_cmd->add_option("--objective", opt.objective,
                        "square-sum | power:<p> | dec-min | inc-max | nash")
      ->required();
  solve_cmd->add_flag("--allow-oracle", opt.allow_oracle,
                      "fall back to brute force on NP-hard shapes");
  solve_cmd->add_option("--cap-assignments", opt.cap_assignments,
                        "assignment-space cap for the fallback");

  CLI::App* partition_cmd =
      app.add_subcommand("partition", "emit canonical and principal partitions");
  add_io(partition_cmd);

  CLI::App* realize_cmd =
      app.add_subcommand("realize", "turn target utilities into an allocation");
  add_io(realize_cmd);
  realize_cmd->add_option("--target", opt.target_path,
                          "utilities JSON (pure instances)");
  realize_cmd->add_option("--indivisible-target", opt.indivisible_target_path,
                          "utilities from indivisible goods (mixed instances)");
  realize_cmd->add_option("--divisible-target", opt.divisible_target_path,
                          "utilities from divisible goods (mixed instances)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "validate an allocation against an instance");
  add_io(verify_cmd);
  verify_cmd->add_option("--allocation", opt.allocation_path,
                         "allocation JSON path")
      ->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference optimum");
  add_io(oracle_cmd);
  oracle_cmd->add_option("--objective", opt.objective,
                         "square-sum | power:<p> | dec-min | inc-max | nash")
      ->required();
  oracle_cmd->add_option("--cap-assignments", opt.cap_assignments,
                         "assignment-space cap");
  oracle_cmd->add_flag("--continuous", opt.continuous,
                       "certified relaxed minimizer instead of brute force");
  oracle_cmd->add_option("--tol", opt.tol,
                         "duality-gap tolerance for --continuous, as p/q");

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->add_option("--output", opt.output, "output path, - or empty for stdout");
  gen_cmd->add_option("--kind", opt.gen_kind,
                      "random | hardness-profile | hardness-vector");
  gen_cmd->add_option("--seed", opt.seed, "RNG seed for --kind random");
  gen_cmd->add_option("--dm", opt.dm_path,
                      "matching instance JSON for hardness kinds, - for stdin");
  gen_cmd->add_option("--min-agents", opt.min_agents, "random: minimum agents");
  gen_cmd->add_option("--max-agents", opt.max_agents, "random: maximum agents");
  gen_cmd->add_option("--max-indivisible", opt.max_indivisible,
                      "random: maximum indivisible goods");
  gen_cmd->add_option("--max-divisible", opt.max_divisible,
                      "random: maximum divisible goods");
  gen_cmd->add_flag("--mixed-divisible", opt.mixed_divisible,
                    "random: draw each divisible desire-set independently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::unique_ptr<std::ofstream> dump;
  if (!opt.dump_network_path.empty()) {
    dump = std::make_unique<std::ofstream>(opt.dump_network_path,
                                           std::ios::app);
    set_network_dump([&dump](const std::string& label, const std::string& dot) {
      *dump << "// " << label << "\n" << dot << "\n";
    });
  }

  try {
    if (solve_cmd->parsed()) return run_solve(opt);
    if (partition_cmd->parsed()) return run_partition(opt);
    if (realize_cmd->parsed()) return run_realize(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (oracle_cmd->parsed()) return run_oracle(opt);
    if (gen_cmd->parsed()) return run_gen(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const HardInstanceError& e) {
    std::cerr << "hard instance: " << e.what() << "\n";
    return 3;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
