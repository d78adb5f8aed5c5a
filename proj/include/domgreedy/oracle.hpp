#pragma once

#include "domgreedy/potentials.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace domgreedy {

/// Checks S against the problem definition directly from adjacency; shares no
/// code with the potentials.
bool verify(Problem problem, const WeightedGraph& g, const NodeSubset& s,
            const ProblemParams& params);

class OracleLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Smallest feasible set, enumerating by size and then lexicographically.
/// nullopt when no subset is feasible. Throws OracleLimit when n > limit.
std::optional<NodeSubset> brute_force_min(Problem problem, const WeightedGraph& g,
                                          const ProblemParams& params, std::size_t limit = 20);

struct GapWitness {
  NodeSubset a;
  NodeSubset b;
  NodeId x = 0;
};

struct GapScanResult {
  Rational max_gap;
  GapWitness witness;
  bool conditional = false;
  bool sampled = false;
  std::uint64_t triples_scanned = 0;
};

struct GapScanOptions {
  bool conditional = false;
  std::size_t exhaustive_limit = 5;
  /// Zero means exhaustive; otherwise the number of random triples to draw.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

/// Largest violation of diminishing returns. Unconditional: max over
/// A subset-of B, x not in B of D_x f(B) - D_x f(A). Conditional: max over
/// any A, connected B, x not in B of D_x f(A u B) - D_x f(A).
GapScanResult gap_scan(const Potential& potential, const GapScanOptions& options = {});

/// Recomputes the gap of a single triple from scratch.
Rational gap_of(const Potential& potential, const GapWitness& w, bool conditional);

/// ms(v): smallest positive theta_v - W_A(v) over A subset of N(v). Returns
/// theta_v when no shortfall is positive except the empty one, and 0 for
/// nodes with theta_v = 0.
Rational ms_oracle(const WeightedGraph& g, NodeId v, const ThresholdConfig& t,
                   std::size_t degree_limit = 20);

struct Diffusion {
  NodeSubset activated;
  std::size_t rounds = 0;
  /// Nodes activated in each round, round 1 first.
  std::vector<std::vector<NodeId>> waves;
};

/// Synchronous linear-threshold closure: each round, every inactive v with
/// W_active(v) >= theta_v activates; stops at the first round with no change.
Diffusion lt_closure(const WeightedGraph& g, const NodeSubset& seeds, const ThresholdConfig& t);

/// Order of C whose every prefix induces a connected subgraph (BFS from the
/// smallest member). Throws GraphError if C is disconnected.
std::vector<NodeId> prefix_connected_order(const WeightedGraph& g, const NodeSubset& c);

/// One representative per isomorphism class of connected unit-weight graphs
/// on n nodes (n <= 7).
std::vector<WeightedGraph> connected_graphs(std::size_t n);

}  // namespace domgreedy
