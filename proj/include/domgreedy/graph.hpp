#pragma once

#include "domgreedy/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace domgreedy {

using NodeId = std::uint32_t;

/// A subset of nodes of a fixed universe {0..n-1}: O(1) membership plus the
/// order in which members were inserted.
class NodeSubset {
 public:
  NodeSubset() = default;
  explicit NodeSubset(std::size_t universe_size) : membership_(universe_size, 0) {}

  static NodeSubset full(std::size_t universe_size);
  /// Members are the set bits of `mask`, inserted in increasing id order.
  static NodeSubset from_mask(std::size_t universe_size, std::uint64_t mask);
  static NodeSubset from_nodes(std::size_t universe_size, std::span<const NodeId> nodes);

  std::size_t universe_size() const { return membership_.size(); }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  bool contains(NodeId v) const { return v < membership_.size() && membership_[v] != 0; }

  /// Returns false if v was already a member.
  bool insert(NodeId v);

  std::span<const NodeId> members() const { return order_; }
  /// Members in increasing id order.
  std::vector<NodeId> sorted_members() const;
  std::uint64_t mask() const;

  friend bool operator==(const NodeSubset& a, const NodeSubset& b) {
    return a.membership_ == b.membership_;
  }

 private:
  std::vector<std::uint8_t> membership_;
  std::vector<NodeId> order_;
};

struct Neighbor {
  NodeId node;
  Rational weight;
};

struct EdgeSpec {
  NodeId u;
  NodeId v;
  Rational weight;
};

enum class WeightMode { unit, rational };

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected graph with strictly positive rational edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws GraphError on self-loops, duplicate edges, out-of-range ids or
  /// non-positive weights.
  static WeightedGraph from_edges(std::size_t node_count, std::vector<EdgeSpec> edges);
  static WeightedGraph unit(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Neighbor> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }
  WeightMode weight_mode() const { return mode_; }

  /// W(v): total weight of edges incident to v.
  const Rational& total_weight(NodeId v) const { return total_weight_[v]; }
  /// W: maximum of W(v) over all nodes (0 for the empty or edgeless graph).
  const Rational& max_total_weight() const { return max_total_weight_; }

  bool has_isolated_node() const;
  bool adjacent(NodeId u, NodeId v) const;

  /// Edges with u < v, in the order they were supplied.
  std::span<const EdgeSpec> edges() const { return edges_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<EdgeSpec> edges_;
  std::vector<Rational> total_weight_;
  Rational max_total_weight_;
  std::size_t max_degree_ = 0;
  WeightMode mode_ = WeightMode::unit;
};

/// Edge-list text format: first non-comment line is the node count, then one
/// `u v [w]` line per edge. `#` starts a comment line. Weights are integers or
/// `p/q`; omitted weights default to 1.
WeightedGraph parse_graph(std::string_view text);
WeightedGraph load_graph(const std::string& path);
std::string serialize_graph(const WeightedGraph& g);

/// Node threshold theta_v = fraction * W(v), or its ceiling in ceiling mode.
struct ThresholdConfig {
  Rational fraction = make_rational(1, 2);
  bool ceiling = false;

  /// Throws GraphError when fraction is outside (0,1] or ceiling mode is
  /// requested on a graph that is not unit-weighted.
  void validate(const WeightedGraph& g) const;
  Rational threshold(const WeightedGraph& g, NodeId v) const;
};

/// W_A(v): total weight of edges from v into A.
Rational weight_toward(const WeightedGraph& g, NodeId v, const NodeSubset& a);

/// l(v): lcm of the denominators of theta_v and of v's incident edge weights.
Natural node_lcm(const WeightedGraph& g, NodeId v, const ThresholdConfig& t);
/// L: maximum of l(v) over all nodes (1 for the empty graph).
Natural graph_lcm(const WeightedGraph& g, const ThresholdConfig& t);

/// p(A): components of the subgraph induced by A; 0 for A empty.
std::size_t induced_components(const WeightedGraph& g, const NodeSubset& a);
/// q(A): components of the spanning subgraph on V whose edges are those with
/// at least one endpoint in A. Untouched nodes are singleton components.
std::size_t covering_components(const WeightedGraph& g, const NodeSubset& a);
/// True iff A induces a connected subgraph; true for the empty set.
bool is_connected_subset(const WeightedGraph& g, const NodeSubset& a);
bool is_connected(const WeightedGraph& g);

/// Union-find with union by size. find() does not compress, so it can run
/// against a const snapshot.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0);
  NodeId find(NodeId x) const;
  /// Returns true if x and y were in different sets.
  bool unite(NodeId x, NodeId y);
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_ = 0;
};

}  // namespace domgreedy
