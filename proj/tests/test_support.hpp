#pragma once

// Graph builders and independent reference computations shared by the unit
// tests. Nothing here calls into the potentials.

#include "domgreedy/graph.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using domgreedy::EdgeSpec;
using domgreedy::NodeId;
using domgreedy::Rational;
using domgreedy::WeightedGraph;

inline WeightedGraph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return WeightedGraph::unit(n, e);
}

inline WeightedGraph star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return WeightedGraph::unit(leaves + 1, e);
}

inline WeightedGraph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return WeightedGraph::unit(n, e);
}

/// G(n, 1/2)-style graph with weights a/b, a,b uniform in [1, max_den].
inline WeightedGraph random_weighted(std::mt19937_64& rng, std::size_t n, unsigned max_den,
                                     double p = 0.5) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<long> part(1, max_den);
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v, domgreedy::make_rational(part(rng), static_cast<unsigned long>(part(rng)))});
  return WeightedGraph::from_edges(n, std::move(edges));
}

/// Component count by depth-first search over an explicit edge predicate.
template <typename Keep, typename Node>
std::size_t count_components(const WeightedGraph& g, Node in_universe, Keep keep_edge) {
  const std::size_t n = g.node_count();
  std::vector<int> seen(n, 0);
  std::size_t comps = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (!in_universe(s) || seen[s]) continue;
    ++comps;
    std::vector<NodeId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u)) {
        if (in_universe(nb.node) && keep_edge(u, nb.node) && !seen[nb.node]) {
          seen[nb.node] = 1;
          stack.push_back(nb.node);
        }
      }
    }
  }
  return comps;
}

}  // namespace testsupport
