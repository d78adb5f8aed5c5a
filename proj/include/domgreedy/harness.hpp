#pragma once

#include "domgreedy/greedy.hpp"
#include "domgreedy/oracle.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace domgreedy {

/// G(n, p) instances with unit or random rational weights.
struct GeneratorSpec {
  std::size_t n = 8;
  Rational p = make_rational(1, 2);
  /// 0 for unit weights, otherwise weights a/b with a, b uniform in [1, D].
  unsigned weight_denominator = 0;
  /// Resample until connected.
  bool connected = false;
  std::size_t max_attempts = 100000;
};

/// Parses "unit" or "rand:D".
unsigned parse_weight_model(const std::string& text);

struct GeneratedInstance {
  WeightedGraph graph;
  std::size_t rejections = 0;
};

/// Deterministic in (spec, seed). Throws std::invalid_argument on bad
/// parameters and std::runtime_error when no connected sample is found.
GeneratedInstance generate_gnp(const GeneratorSpec& spec, std::uint64_t seed);

/// Seed of instance `index` within an experiment seeded with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

struct InstanceRecord {
  std::size_t id = 0;
  Problem problem = Problem::tds;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  Rational max_weight;
  Natural lcm;
  GreedyRun run;
  std::optional<TheoreticalBound> bound;  // absent on edgeless graphs
  BoundReport report;
  std::optional<std::vector<NodeId>> optimum;
  std::size_t rejections = 0;
  double wall_ms = 0;

  bool violated() const { return report.bound_satisfied.has_value() && !*report.bound_satisfied; }
};

/// Greedy run plus optional exact optimum and bound check for one graph.
InstanceRecord solve_instance(std::size_t id, const WeightedGraph& g, Problem problem,
                              const ProblemParams& params, bool oracle,
                              std::size_t oracle_limit = 16);

struct ExperimentConfig {
  Problem problem = Problem::tds;
  ProblemParams params;
  std::uint64_t seed = 1;
  GeneratorSpec generator;
  std::size_t count = 100;
  bool oracle = true;
  std::size_t oracle_limit = 16;
  unsigned threads = 1;
};

/// Records are ordered by instance id whatever the thread count.
std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config);

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const InstanceRecord& record, bool with_timing = true);
std::string render_jsonl(const std::vector<InstanceRecord>& records, bool with_timing = true);
std::string render_csv(const std::vector<InstanceRecord>& records, bool with_timing = true);

nlohmann::json to_json(const GapScanResult& result);
nlohmann::json to_json(const Diffusion& diffusion, std::size_t n);

/// Bound value rounded to six decimals for presentation.
double round6(double x);

}  // namespace domgreedy
