// Command-line front end for the greedy domination solvers.

#include "domgreedy/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace domgreedy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

struct Options {
  std::string graph_path;
  std::string problem = "tds";
  unsigned m = 1;
  std::string fraction = "1/2";
  bool ceiling = false;
  std::uint64_t seed = 1;
  bool oracle = false;
  std::size_t oracle_limit = 16;
  std::string out;
  std::string format = "json";

  std::string gen = "gnp";
  std::size_t n = 8;
  std::string p = "1/2";
  std::string weights = "unit";
  bool connected = false;
  std::size_t count = 100;
  unsigned threads = 0;
  bool no_timing = false;

  std::string set;
  bool conditional = false;
  std::uint64_t samples = 0;
  std::size_t exhaustive_limit = 5;
  bool compare_random = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Problem problem_of(const Options& o) {
  auto p = parse_problem(o.problem);
  if (!p) throw UsageError("unknown problem '" + o.problem + "'");
  return *p;
}

ProblemParams params_of(const Options& o) {
  ProblemParams params;
  if (o.m == 0) throw UsageError("--m must be at least 1");
  params.m = o.m;
  try {
    params.threshold.fraction = parse_rational(o.fraction);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--fraction: ") + e.what());
  }
  params.threshold.ceiling = o.ceiling;
  return params;
}

WeightedGraph graph_of(const Options& o) {
  if (o.graph_path.empty()) throw UsageError("--graph is required");
  return load_graph(o.graph_path);
}

std::vector<NodeId> parse_nodes(const std::string& text, std::size_t n) {
  std::vector<NodeId> nodes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
      throw UsageError("invalid node id '" + tok + "'");
    }
    const auto v = std::stoul(tok);
    if (v >= n) throw UsageError("node " + tok + " out of range (n = " + std::to_string(n) + ")");
    nodes.push_back(static_cast<NodeId>(v));
  }
  return nodes;
}

GeneratorSpec generator_of(const Options& o) {
  if (o.gen != "gnp") throw UsageError("only the gnp generator is available");
  GeneratorSpec spec;
  spec.n = o.n;
  try {
    spec.p = parse_rational(o.p);
    spec.weight_denominator = parse_weight_model(o.weights);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (sgn(spec.p) < 0 || spec.p > 1) throw UsageError("--p must lie in [0,1]");
  spec.connected = o.connected;
  return spec;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

std::string render(const Options& o, const std::vector<InstanceRecord>& records) {
  if (o.format == "csv") return render_csv(records, !o.no_timing);
  if (o.format == "json") return render_jsonl(records, !o.no_timing);
  throw UsageError("--format must be json or csv");
}

int cmd_solve(const Options& o) {
  const auto g = graph_of(o);
  auto rec = solve_instance(0, g, problem_of(o), params_of(o), o.oracle, o.oracle_limit);
  emit(o, render(o, {rec}));
  if (rec.violated()) return kExitViolation;
  return rec.run.feasible ? kExitOk : kExitInfeasible;
}

int cmd_exact(const Options& o) {
  const auto g = graph_of(o);
  const auto problem = problem_of(o);
  auto best = brute_force_min(problem, g, params_of(o), o.oracle_limit);
  nlohmann::json j;
  j["problem"] = std::string(problem_name(problem));
  j["feasible"] = best.has_value();
  j["optimal_size"] = best ? nlohmann::json(best->size()) : nlohmann::json();
  j["set"] = best ? nlohmann::json(best->sorted_members()) : nlohmann::json();
  emit(o, j.dump() + "\n");
  return best ? kExitOk : kExitInfeasible;
}

int cmd_verify(const Options& o) {
  const auto g = graph_of(o);
  const auto problem = problem_of(o);
  const auto params = params_of(o);
  const auto nodes = parse_nodes(o.set, g.node_count());
  const auto s = NodeSubset::from_nodes(g.node_count(), nodes);
  const bool ok = verify(problem, g, s, params);
  nlohmann::json j;
  j["problem"] = std::string(problem_name(problem));
  j["set"] = s.sorted_members();
  j["valid"] = ok;
  try {
    auto potential = make_potential(problem, g, params);
    j["value"] = to_string(potential->value(s));
    j["target"] = to_string(potential->target());
  } catch (const InfeasibleInstance&) {
    j["value"] = nullptr;
    j["target"] = nullptr;
  }
  emit(o, j.dump() + "\n");
  return ok ? kExitOk : kExitInfeasible;
}

int cmd_gapscan(const Options& o) {
  const auto g = graph_of(o);
  auto potential = make_potential(problem_of(o), g, params_of(o));
  GapScanOptions opt;
  opt.conditional = o.conditional;
  opt.samples = o.samples;
  opt.seed = o.seed;
  opt.exhaustive_limit = o.exhaustive_limit;
  auto result = gap_scan(*potential, opt);
  auto j = to_json(result);
  j["problem"] = potential->name();
  j["L"] = graph_lcm(g, params_of(o).threshold).get_str();
  emit(o, j.dump() + "\n");
  return kExitOk;
}

int cmd_experiment(const Options& o) {
  ExperimentConfig cfg;
  cfg.problem = problem_of(o);
  cfg.params = params_of(o);
  cfg.seed = o.seed;
  cfg.generator = generator_of(o);
  cfg.count = o.count;
  cfg.oracle = o.oracle;
  cfg.oracle_limit = o.oracle_limit;
  cfg.threads = o.threads > 0 ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  const auto records = run_experiment(cfg);
  emit(o, render(o, records));

  std::size_t feasible = 0, checked = 0, violations = 0, rejections = 0;
  for (const auto& r : records) {
    feasible += r.run.feasible ? 1 : 0;
    checked += r.report.bound_satisfied ? 1 : 0;
    violations += r.violated() ? 1 : 0;
    rejections += r.rejections;
  }
  std::cerr << "instances=" << records.size() << " feasible=" << feasible
            << " bound_checked=" << checked << " violations=" << violations
            << " rejections=" << rejections << '\n';
  return violations > 0 ? kExitViolation : kExitOk;
}

int cmd_diffuse(const Options& o) {
  const auto g = graph_of(o);
  const auto params = params_of(o);
  params.threshold.validate(g);
  const auto seeds = NodeSubset::from_nodes(g.node_count(), parse_nodes(o.set, g.node_count()));
  nlohmann::json j;
  j["seeds"] = seeds.sorted_members();
  j["trace"] = to_json(lt_closure(g, seeds, params.threshold), g.node_count());

  if (o.compare_random) {
    // Greedy WPPIDS seed against a uniformly drawn seed set of the same size.
    auto potential = wppids_potential(g, params.threshold);
    const auto run = greedy_construct(*potential);
    const auto greedy_seeds = NodeSubset::from_nodes(g.node_count(), run.picks);
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    std::mt19937_64 rng(o.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(run.size());
    const auto random_seeds = NodeSubset::from_nodes(g.node_count(), all);
    j["greedy"] = {{"seeds", greedy_seeds.sorted_members()},
                   {"trace", to_json(lt_closure(g, greedy_seeds, params.threshold), g.node_count())}};
    j["random"] = {{"seeds", random_seeds.sorted_members()},
                   {"trace", to_json(lt_closure(g, random_seeds, params.threshold), g.node_count())}};
  }
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_gen(const Options& o) {
  auto spec = generator_of(o);
  auto inst = generate_gnp(spec, o.seed);
  std::string text = "# gnp n=" + std::to_string(spec.n) + " p=" + to_string(spec.p) +
                     " weights=" + o.weights + " seed=" + std::to_string(o.seed) + "\n";
  text += serialize_graph(inst.graph);
  emit(o, text);
  return kExitOk;
}

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph_path, "Edge-list graph file");
  cmd->add_option("--problem", o.problem, "tds|mtds|wppids|wppitds|wppicds");
  cmd->add_option("--m", o.m, "Fault tolerance for mtds");
  cmd->add_option("--fraction", o.fraction, "Threshold fraction p/q");
  cmd->add_flag("--ceiling", o.ceiling, "Round thresholds up (unit weights only)");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_flag("--oracle", o.oracle, "Compute exact optima");
  cmd->add_option("--oracle-limit", o.oracle_limit, "Largest n for exact search");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "json|csv");
}

void add_generator(CLI::App* cmd, Options& o) {
  cmd->add_option("--gen", o.gen, "Generator model (gnp)");
  cmd->add_option("--n", o.n, "Node count");
  cmd->add_option("--p", o.p, "Edge probability p/q");
  cmd->add_option("--weights", o.weights, "unit | rand:D");
  cmd->add_flag("--connected", o.connected, "Resample until connected");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy approximation for total, fault-tolerant and partial influence domination"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Run the greedy constructor on a graph");
  add_shared(solve, o);
  auto* exact = app.add_subcommand("exact", "Exhaustive minimum solution");
  add_shared(exact, o);
  auto* verify_cmd = app.add_subcommand("verify", "Check a node set against the definition");
  add_shared(verify_cmd, o);
  verify_cmd->add_option("--set", o.set, "Comma-separated node ids")->required();
  auto* gapscan = app.add_subcommand("gapscan", "Measure the submodularity gap of a potential");
  add_shared(gapscan, o);
  gapscan->add_flag("--conditional", o.conditional, "Restrict B to connected sets");
  gapscan->add_option("--samples", o.samples, "Random triples instead of exhaustive scan");
  gapscan->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest n for exhaustive scan");
  auto* experiment = app.add_subcommand("experiment", "Bound validation on random instances");
  add_shared(experiment, o);
  add_generator(experiment, o);
  experiment->add_option("--count", o.count, "Number of instances");
  experiment->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  experiment->add_flag("--no-timing", o.no_timing, "Omit the wall_ms field");
  auto* diffuse = app.add_subcommand("diffuse", "Linear threshold activation from a seed set");
  add_shared(diffuse, o);
  diffuse->add_option("--seeds", o.set, "Comma-separated seed node ids");
  diffuse->add_flag("--compare-random", o.compare_random,
                    "Also compare a greedy seed set with a random one of equal size");
  auto* gen = app.add_subcommand("gen", "Write a random graph");
  add_shared(gen, o);
  add_generator(gen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*exact) return cmd_exact(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*gapscan) return cmd_gapscan(o);
    if (*experiment) return cmd_experiment(o);
    if (*diffuse) return cmd_diffuse(o);
    if (*gen) return cmd_gen(o);
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
