#include "domgreedy/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace domgreedy {

unsigned parse_weight_model(const std::string& text) {
  if (text == "unit") return 0;
  const std::string prefix = "rand:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string d = text.substr(prefix.size());
    if (!d.empty() && d.size() < 7 && d.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long value = std::stoul(d);
      if (value >= 1) return static_cast<unsigned>(value);
    }
  }
  throw std::invalid_argument("weight model must be 'unit' or 'rand:D' with D >= 1, got '" + text + "'");
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GeneratedInstance generate_gnp(const GeneratorSpec& spec, std::uint64_t seed) {
  if (sgn(spec.p) < 0 || spec.p > 1) {
    throw std::invalid_argument("edge probability must lie in [0,1], got " + to_string(spec.p));
  }
  if (!spec.p.get_num().fits_ulong_p() || !spec.p.get_den().fits_ulong_p()) {
    throw std::invalid_argument("edge probability has an oversized numerator or denominator");
  }
  if (spec.connected && spec.n >= 2 && sgn(spec.p) == 0) {
    throw std::invalid_argument("a connected sample needs a positive edge probability");
  }
  const std::uint64_t num = spec.p.get_num().get_ui();
  const std::uint64_t den = spec.p.get_den().get_ui();

  std::mt19937_64 rng(seed);
  GeneratedInstance out;
  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    std::vector<EdgeSpec> edges;
    for (NodeId u = 0; u < spec.n; ++u) {
      for (NodeId v = u + 1; v < spec.n; ++v) {
        if (rng() % den >= num) continue;
        Rational w(1);
        if (spec.weight_denominator > 0) {
          const long a = static_cast<long>(rng() % spec.weight_denominator) + 1;
          const unsigned long b = rng() % spec.weight_denominator + 1;
          w = make_rational(a, b);
        }
        edges.push_back({u, v, std::move(w)});
      }
    }
    out.graph = WeightedGraph::from_edges(spec.n, std::move(edges));
    if (!spec.connected || is_connected(out.graph)) return out;
    ++out.rejections;
  }
  throw std::runtime_error("no connected G(n,p) sample within " +
                           std::to_string(spec.max_attempts) + " attempts");
}

InstanceRecord solve_instance(std::size_t id, const WeightedGraph& g, Problem problem,
                              const ProblemParams& params, bool oracle, std::size_t oracle_limit) {
  const auto start = std::chrono::steady_clock::now();
  InstanceRecord rec;
  rec.id = id;
  rec.problem = problem;
  rec.n = g.node_count();
  rec.edges = g.edge_count();
  rec.max_degree = g.max_degree();
  rec.max_weight = g.max_total_weight();
  rec.lcm = graph_lcm(g, params.threshold);

  auto potential = make_potential(problem, g, params);
  rec.run = greedy_construct(*potential);

  std::optional<std::size_t> opt;
  if (oracle && g.node_count() <= oracle_limit) {
    if (auto best = brute_force_min(problem, g, params, oracle_limit)) {
      rec.optimum = best->sorted_members();
      opt = best->size();
    }
  }
  try {
    rec.bound = theoretical_bound(problem, g, params);
  } catch (const UndefinedBound&) {
    rec.bound.reset();
  }
  if (rec.bound) {
    rec.report = ratio_report(problem, rec.run.size(), rec.run.feasible ? opt : std::nullopt, *rec.bound);
  } else {
    rec.report.problem = problem;
    rec.report.greedy_size = rec.run.size();
    rec.report.optimal_size = opt;
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config) {
  GeneratorSpec gen = config.generator;
  if (config.problem == Problem::wppicds) gen.connected = true;

  std::vector<InstanceRecord> records(config.count);
  std::vector<std::exception_ptr> errors(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      try {
        auto inst = generate_gnp(gen, instance_seed(config.seed, i));
        records[i] = solve_instance(i, inst.graph, config.problem, config.params, config.oracle,
                                    config.oracle_limit);
        records[i].rejections = inst.rejections;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(config.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

// ---------------------------------------------------------------------------
// Serialization

double round6(double x) { return std::round(x * 1e6) / 1e6; }

namespace {

nlohmann::json rationals(const std::vector<Rational>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& r : v) arr.push_back(to_string(r));
  return arr;
}

std::string opt_string(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

nlohmann::json to_json(const InstanceRecord& r, bool with_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["instance"] = r.id;
  j["problem"] = std::string(problem_name(r.problem));
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["max_degree"] = r.max_degree;
  j["W"] = to_string(r.max_weight);
  j["L"] = r.lcm.get_str();
  j["greedy_size"] = r.run.size();
  j["picks"] = r.run.picks;
  j["marginals"] = rationals(r.run.marginals);
  j["delta_max"] = to_string(r.run.delta_max);
  j["delta_min"] = to_string(r.run.delta_min);
  j["final_value"] = to_string(r.run.final_value);
  j["target"] = to_string(r.run.target);
  j["feasible"] = r.run.feasible;
  j["optimal_size"] = r.report.optimal_size ? nlohmann::json(*r.report.optimal_size) : nlohmann::json();
  j["optimum"] = r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json();
  j["bound"] = r.bound ? nlohmann::json(round6(r.bound->value)) : nlohmann::json();
  j["bound_argument"] = r.bound ? nlohmann::json(to_string(r.bound->log_argument)) : nlohmann::json();
  j["observed_ratio"] =
      r.report.observed_ratio ? nlohmann::json(to_string(*r.report.observed_ratio)) : nlohmann::json();
  j["bound_satisfied"] =
      r.report.bound_satisfied ? nlohmann::json(*r.report.bound_satisfied) : nlohmann::json();
  j["rejections"] = r.rejections;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

std::string render_jsonl(const std::vector<InstanceRecord>& records, bool with_timing) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r, with_timing).dump();
    out += '\n';
  }
  return out;
}

std::string render_csv(const std::vector<InstanceRecord>& records, bool with_timing) {
  std::ostringstream out;
  out << "instance,problem,n,edges,max_degree,W,L,greedy_size,optimal_size,delta_max,delta_min,"
         "bound,observed_ratio,bound_satisfied,feasible,rejections";
  if (with_timing) out << ",wall_ms";
  out << '\n';
  for (const auto& r : records) {
    out << r.id << ',' << problem_name(r.problem) << ',' << r.n << ',' << r.edges << ','
        << r.max_degree << ',' << to_string(r.max_weight) << ',' << r.lcm.get_str() << ','
        << r.run.size() << ',' << opt_string(r.report.optimal_size) << ','
        << to_string(r.run.delta_max) << ',' << to_string(r.run.delta_min) << ',';
    if (r.bound) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.bound->value);
      out << buf;
    }
    out << ',' << (r.report.observed_ratio ? to_string(*r.report.observed_ratio) : "") << ','
        << (r.report.bound_satisfied ? (*r.report.bound_satisfied ? "true" : "false") : "") << ','
        << (r.run.feasible ? "true" : "false") << ',' << r.rejections;
    if (with_timing) out << ',' << r.wall_ms;
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const GapScanResult& r) {
  nlohmann::json j;
  j["max_gap"] = to_string(r.max_gap);
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  j["conditional"] = r.conditional;
  j["triples_scanned"] = r.triples_scanned;
  j["witness"] = {{"A", r.witness.a.sorted_members()},
                  {"B", r.witness.b.sorted_members()},
                  {"x", r.witness.x}};
  return j;
}

nlohmann::json to_json(const Diffusion& d, std::size_t n) {
  nlohmann::json j;
  j["rounds"] = d.rounds;
  j["waves"] = d.waves;
  j["activated"] = d.activated.sorted_members();
  j["coverage"] = std::to_string(d.activated.size()) + "/" + std::to_string(n);
  return j;
}

}  // namespace domgreedy
