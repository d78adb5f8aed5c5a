#include "domgreedy/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace domgreedy {

// ---------------------------------------------------------------------------
// NodeSubset

NodeSubset NodeSubset::full(std::size_t universe_size) {
  NodeSubset s(universe_size);
  for (NodeId v = 0; v < universe_size; ++v) s.insert(v);
  return s;
}

NodeSubset NodeSubset::from_mask(std::size_t universe_size, std::uint64_t mask) {
  NodeSubset s(universe_size);
  for (NodeId v = 0; v < universe_size && v < 64; ++v) {
    if (mask >> v & 1U) s.insert(v);
  }
  return s;
}

NodeSubset NodeSubset::from_nodes(std::size_t universe_size, std::span<const NodeId> nodes) {
  NodeSubset s(universe_size);
  for (NodeId v : nodes) {
    if (v >= universe_size) {
      throw std::out_of_range("node " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_size));
    }
    s.insert(v);
  }
  return s;
}

bool NodeSubset::insert(NodeId v) {
  if (membership_.at(v)) return false;
  membership_[v] = 1;
  order_.push_back(v);
  return true;
}

std::vector<NodeId> NodeSubset::sorted_members() const {
  std::vector<NodeId> out(order_);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t NodeSubset::mask() const {
  std::uint64_t m = 0;
  for (NodeId v : order_) {
    if (v >= 64) throw std::out_of_range("mask() needs node ids below 64");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph WeightedGraph::from_edges(std::size_t node_count, std::vector<EdgeSpec> edges) {
  WeightedGraph g;
  g.adjacency_.resize(node_count);
  g.total_weight_.assign(node_count, Rational(0));
  std::set<std::pair<NodeId, NodeId>> seen;
  bool unit = true;
  for (auto& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a node outside 0.." + std::to_string(node_count) + "-1");
    }
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    if (sgn(e.weight) <= 0) {
      throw GraphError("non-positive weight " + to_string(e.weight) + " on edge (" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.weight != 1) unit = false;
    g.adjacency_[e.u].push_back({e.v, e.weight});
    g.adjacency_[e.v].push_back({e.u, e.weight});
    g.total_weight_[e.u] += e.weight;
    g.total_weight_[e.v] += e.weight;
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    g.max_degree_ = std::max(g.max_degree_, adj.size());
  }
  g.max_total_weight_ = 0;
  for (const auto& w : g.total_weight_) {
    if (w > g.max_total_weight_) g.max_total_weight_ = w;
  }
  g.mode_ = unit ? WeightMode::unit : WeightMode::rational;
  g.edges_ = std::move(edges);
  return g;
}

WeightedGraph WeightedGraph::unit(std::size_t node_count,
                                  std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (auto [u, v] : edges) specs.push_back({u, v, Rational(1)});
  return from_edges(node_count, std::move(specs));
}

bool WeightedGraph::has_isolated_node() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& adj) { return adj.empty(); });
}

bool WeightedGraph::adjacent(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, NodeId x) { return n.node < x; });
  return it != adj.end() && it->node == v;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.node_count() != b.node_count()) return false;
  for (NodeId v = 0; v < a.node_count(); ++v) {
    auto na = a.neighbors(v);
    auto nb = b.neighbors(v);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end(),
                    [](const Neighbor& x, const Neighbor& y) {
                      return x.node == y.node && x.weight == y.weight;
                    })) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

unsigned long parse_index(std::string_view tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.size() > 18 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return std::stoul(std::string(tok));
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_count = false;
  std::size_t n = 0;
  std::vector<EdgeSpec> edges;
  std::set<std::pair<NodeId, NodeId>> seen;

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_count) {
      if (toks.size() != 1) throw ParseError(line_no, "expected a single node count");
      n = parse_index(toks[0], line_no, "node count");
      have_count = true;
      continue;
    }
    if (toks.size() != 2 && toks.size() != 3) {
      throw ParseError(line_no, "expected 'u v [w]'");
    }
    const auto u = parse_index(toks[0], line_no, "node id");
    const auto v = parse_index(toks[1], line_no, "node id");
    if (u >= n || v >= n) {
      throw ParseError(line_no, "node id out of range (n = " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    Rational w(1);
    if (toks.size() == 3) {
      try {
        w = parse_rational(toks[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("malformed weight: ") + e.what());
      }
      if (sgn(w) <= 0) throw ParseError(line_no, "non-positive weight " + to_string(w));
    }
    const std::pair<NodeId, NodeId> key{static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))};
    if (!seen.insert(key).second) {
      throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), std::move(w)});
  }
  if (!have_count) throw ParseError(line_no, "missing node count");
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.node_count() << '\n';
  const bool unit = g.weight_mode() == WeightMode::unit;
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (!unit) out << ' ' << to_string(e.weight);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Thresholds and weight queries

void ThresholdConfig::validate(const WeightedGraph& g) const {
  if (sgn(fraction) <= 0 || fraction > 1) {
    throw GraphError("threshold fraction must lie in (0,1], got " + to_string(fraction));
  }
  if (ceiling && g.weight_mode() != WeightMode::unit) {
    throw GraphError("ceiling thresholds are only defined for unit-weight graphs");
  }
}

Rational ThresholdConfig::threshold(const WeightedGraph& g, NodeId v) const {
  Rational theta = fraction * g.total_weight(v);
  if (ceiling) return Rational(domgreedy::ceil(theta));
  return theta;
}

Rational weight_toward(const WeightedGraph& g, NodeId v, const NodeSubset& a) {
  Rational sum(0);
  for (const auto& nb : g.neighbors(v)) {
    if (a.contains(nb.node)) sum += nb.weight;
  }
  return sum;
}

Natural node_lcm(const WeightedGraph& g, NodeId v, const ThresholdConfig& t) {
  Natural l = t.threshold(g, v).get_den();
  for (const auto& nb : g.neighbors(v)) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), nb.weight.get_den_mpz_t());
  }
  return l;
}

Natural graph_lcm(const WeightedGraph& g, const ThresholdConfig& t) {
  Natural best(1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Natural l = node_lcm(g, v, t);
    if (l > best) best = l;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Components

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

NodeId DisjointSets::find(NodeId x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool DisjointSets::unite(NodeId x, NodeId y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

std::size_t induced_components(const WeightedGraph& g, const NodeSubset& a) {
  if (a.empty()) return 0;
  DisjointSets ds(g.node_count());
  for (NodeId u : a.members()) {
    for (const auto& nb : g.neighbors(u)) {
      if (a.contains(nb.node)) ds.unite(u, nb.node);
    }
  }
  return ds.set_count() - (g.node_count() - a.size());
}

std::size_t covering_components(const WeightedGraph& g, const NodeSubset& a) {
  DisjointSets ds(g.node_count());
  for (NodeId u : a.members()) {
    for (const auto& nb : g.neighbors(u)) ds.unite(u, nb.node);
  }
  return ds.set_count();
}

bool is_connected_subset(const WeightedGraph& g, const NodeSubset& a) {
  return induced_components(g, a) <= 1;
}

bool is_connected(const WeightedGraph& g) {
  return is_connected_subset(g, NodeSubset::full(g.node_count()));
}

}  // namespace domgreedy
