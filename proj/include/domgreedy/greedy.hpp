#pragma once

#include "domgreedy/potentials.hpp"

#include <optional>
#include <vector>

namespace domgreedy {

/// Trace of one greedy construction.
struct GreedyRun {
  std::vector<NodeId> picks;
  std::vector<Rational> marginals;  // gain of each pick at the time it was taken
  Rational delta_max;               // marginals[0], or 0 for an empty run
  Rational delta_min;               // smallest positive marginal, or 0 for an empty run
  Rational final_value;
  Rational target;
  bool feasible = false;

  std::size_t size() const { return picks.size(); }
};

/// Repeatedly adds the candidate with the largest marginal gain (lowest node
/// id on ties) until no candidate has a positive gain. Stalling below the
/// potential's target is reported through `feasible`, not thrown.
GreedyRun greedy_construct(const Potential& potential);

class UndefinedBound : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Approximation ratio guaranteed for the greedy on a given instance.
struct TheoreticalBound {
  Rational log_argument;  // exact argument of ln
  unsigned offset = 1;    // 1 for the submodular potentials, 2 for wppicds
  double value = 0;       // offset + ln(log_argument), nearest double
  double upper = 0;       // certified upper bound on the real value
};

/// TDS 1+ln(D); mtds 1+ln(D+m-1); wppids 1+ln((1+p)LW); wppitds
/// 1+ln((1+p)LW+D); wppicds 2+ln((1+p)LW+D), where D is the maximum degree,
/// W the maximum node weight, L the graph lcm and p the threshold fraction.
/// In ceiling mode (unit weights, L = 1) the (1+p)LW term is ceil((1+p)W).
/// Throws UndefinedBound on edgeless graphs.
TheoreticalBound theoretical_bound(Problem problem, const WeightedGraph& g,
                                   const ProblemParams& params);

struct BoundReport {
  Problem problem = Problem::tds;
  double theoretical_ratio = 0;
  double certified_ratio = 0;
  std::size_t greedy_size = 0;
  std::optional<std::size_t> optimal_size;
  std::optional<Rational> observed_ratio;
  /// greedy_size < bound * optimal_size + 1; absent without an optimum.
  std::optional<bool> bound_satisfied;
};

BoundReport ratio_report(Problem problem, std::size_t greedy_size,
                         std::optional<std::size_t> optimal_size, const TheoreticalBound& bound);

}  // namespace domgreedy
