#pragma once

#include "domgreedy/graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace domgreedy {

enum class Problem { tds, mtds, wppids, wppitds, wppicds };

std::string_view problem_name(Problem p);
/// Accepts the lowercase names used on the command line.
std::optional<Problem> parse_problem(std::string_view name);

struct ProblemParams {
  unsigned m = 1;  // fault tolerance, mtds only
  ThresholdConfig threshold;
};

class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incremental evaluation of a potential along a growing set. Insertions only;
/// marginal() is a pure read of the current state.
class PotentialState {
 public:
  virtual ~PotentialState() = default;

  virtual Rational marginal(NodeId x) const = 0;
  virtual void insert(NodeId x) = 0;
  virtual std::unique_ptr<PotentialState> clone() const = 0;

  const Rational& value() const { return value_; }
  const NodeSubset& members() const { return members_; }

 protected:
  explicit PotentialState(std::size_t n) : members_(n), value_(0) {}

  NodeSubset members_;
  Rational value_;
};

/// A set function on the nodes of a graph whose maximum characterizes the
/// feasible solutions of one domination problem. The graph must outlive the
/// potential.
class Potential {
 public:
  virtual ~Potential() = default;

  virtual std::string name() const = 0;
  virtual Problem problem() const = 0;

  /// Evaluated from scratch from the definition.
  virtual Rational value(const NodeSubset& a) const = 0;
  virtual std::unique_ptr<PotentialState> start() const = 0;

  /// Value that a set reaches exactly when it is feasible.
  const Rational& target() const { return target_; }
  /// True when the submodularity gap only holds against connected sets.
  virtual bool connectivity_conditional() const { return false; }

  /// f(A + x) - f(A), via the incremental state.
  Rational marginal(const NodeSubset& a, NodeId x) const;
  std::unique_ptr<PotentialState> state_for(const NodeSubset& a) const;

  const WeightedGraph& graph() const { return *graph_; }

 protected:
  explicit Potential(const WeightedGraph& g) : graph_(&g) {}

  const WeightedGraph* graph_;
  Rational target_;
};

/// Number of nodes with at least one neighbor in A. Target |V|.
std::unique_ptr<Potential> tds_potential(const WeightedGraph& g);

/// Sum of per-node progress m_A(v) toward m-fold total domination. Target m|V|.
std::unique_ptr<Potential> ft_total_potential(const WeightedGraph& g, unsigned m);

/// h(A): members count theta_v, other nodes min(W_A(v), theta_v).
/// Target sum of theta_v.
std::unique_ptr<Potential> wppids_potential(const WeightedGraph& g, const ThresholdConfig& t);

/// h(A) + (1/L) * tds(A).
std::unique_ptr<Potential> wppitds_potential(const WeightedGraph& g, const ThresholdConfig& t);

/// h(A) + (1/L)(|V| - q(A) - p(A)). Throws InfeasibleInstance unless g is
/// connected with at least two nodes.
std::unique_ptr<Potential> wppicds_potential(const WeightedGraph& g, const ThresholdConfig& t);

std::unique_ptr<Potential> make_potential(Problem problem, const WeightedGraph& g,
                                          const ProblemParams& params);

// Closed forms used by the additivity identities.

/// K(A) for the total domination potential: nodes with a neighbor in A.
NodeSubset tds_satisfied(const WeightedGraph& g, const NodeSubset& a);
/// K(A) for the fault-tolerant potential: nodes with m_A(v) = m.
NodeSubset ft_satisfied(const WeightedGraph& g, const NodeSubset& a, unsigned m);
/// m_A(v).
unsigned ft_node_level(const WeightedGraph& g, const NodeSubset& a, NodeId v, unsigned m);
/// t_A(x) for x not in A.
unsigned ft_self_increment(const WeightedGraph& g, const NodeSubset& a, NodeId x, unsigned m);
/// |N_{V \ K}(x)|.
std::size_t neighbors_outside(const WeightedGraph& g, NodeId x, const NodeSubset& k);

}  // namespace domgreedy
