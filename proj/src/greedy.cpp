#include "domgreedy/greedy.hpp"

#include <cmath>
#include <limits>

namespace domgreedy {

namespace {

double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

}  // namespace

GreedyRun greedy_construct(const Potential& potential) {
  const std::size_t n = potential.graph().node_count();
  auto state = potential.start();
  GreedyRun run;
  run.target = potential.target();

  while (true) {
    std::optional<NodeId> best;
    Rational best_gain(0);
    for (NodeId x = 0; x < n; ++x) {
      if (state->members().contains(x)) continue;
      Rational gain = state->marginal(x);
      if (gain > best_gain) {
        best_gain = std::move(gain);
        best = x;
      }
    }
    if (!best) break;
    state->insert(*best);
    run.picks.push_back(*best);
    run.marginals.push_back(best_gain);
  }

  run.final_value = state->value();
  run.feasible = run.final_value == run.target;
  if (!run.marginals.empty()) {
    run.delta_max = run.marginals.front();
    run.delta_min = run.marginals.front();
    for (const auto& m : run.marginals) {
      if (m < run.delta_min) run.delta_min = m;
    }
  }
  return run;
}

TheoreticalBound theoretical_bound(Problem problem, const WeightedGraph& g,
                                   const ProblemParams& params) {
  const std::size_t max_deg = g.max_degree();
  if (max_deg == 0) throw UndefinedBound("approximation bound is undefined on an edgeless graph");
  const Rational degree(static_cast<unsigned long>(max_deg));

  const auto& t = params.threshold;
  auto first_step = [&]() -> Rational {
    // Upper bound on the first greedy gain of h, scaled by L.
    const Rational factor = Rational(1) + t.fraction;
    if (t.ceiling) return Rational(ceil(factor * g.max_total_weight()));
    return factor * Rational(graph_lcm(g, t)) * g.max_total_weight();
  };

  TheoreticalBound b;
  switch (problem) {
    case Problem::tds:
      b.log_argument = degree;
      break;
    case Problem::mtds:
      b.log_argument = degree + static_cast<unsigned long>(params.m) - 1;
      break;
    case Problem::wppids:
      t.validate(g);
      b.log_argument = first_step();
      break;
    case Problem::wppitds:
      t.validate(g);
      b.log_argument = first_step() + degree;
      break;
    case Problem::wppicds:
      t.validate(g);
      b.log_argument = first_step() + degree;
      b.offset = 2;
      break;
  }
  if (sgn(b.log_argument) <= 0) throw UndefinedBound("non-positive logarithm argument");

  b.value = b.offset + std::log(b.log_argument.get_d());
  // log is accurate to within one ulp; two steps up from a rounded-up
  // argument covers it, and one more covers the addition.
  const double ln_hi = up(up(std::log(to_double_upper(b.log_argument))));
  b.upper = up(static_cast<double>(b.offset) + ln_hi);
  return b;
}

BoundReport ratio_report(Problem problem, std::size_t greedy_size,
                         std::optional<std::size_t> optimal_size, const TheoreticalBound& bound) {
  BoundReport r;
  r.problem = problem;
  r.theoretical_ratio = bound.value;
  r.certified_ratio = bound.upper;
  r.greedy_size = greedy_size;
  if (!optimal_size) return r;
  r.optimal_size = optimal_size;
  if (*optimal_size > 0) {
    Rational ratio(static_cast<unsigned long>(greedy_size), static_cast<unsigned long>(*optimal_size));
    ratio.canonicalize();
    r.observed_ratio = ratio;
  }
  const double rhs = up(up(bound.upper * static_cast<double>(*optimal_size)) + 1.0);
  r.bound_satisfied = static_cast<double>(greedy_size) < rhs;
  return r;
}

}  // namespace domgreedy
