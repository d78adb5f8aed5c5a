#include "domgreedy/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <random>

namespace domgreedy {

// ---------------------------------------------------------------------------
// Definitions

namespace {

std::size_t neighbors_in(const WeightedGraph& g, NodeId v, const NodeSubset& s) {
  std::size_t c = 0;
  for (const auto& nb : g.neighbors(v)) c += s.contains(nb.node) ? 1 : 0;
  return c;
}

bool totally_dominated(const WeightedGraph& g, const NodeSubset& s) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (neighbors_in(g, v, s) == 0) return false;
  }
  return true;
}

bool partially_dominated(const WeightedGraph& g, const NodeSubset& s, const ThresholdConfig& t) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (s.contains(v)) continue;
    if (weight_toward(g, v, s) < t.threshold(g, v)) return false;
  }
  return true;
}

}  // namespace

bool verify(Problem problem, const WeightedGraph& g, const NodeSubset& s,
            const ProblemParams& params) {
  switch (problem) {
    case Problem::tds:
      return totally_dominated(g, s);
    case Problem::mtds:
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto c = neighbors_in(g, v, s);
        if (s.contains(v) ? c == 0 : c < params.m) return false;
      }
      return true;
    case Problem::wppids:
      return partially_dominated(g, s, params.threshold);
    case Problem::wppitds:
      return partially_dominated(g, s, params.threshold) && totally_dominated(g, s);
    case Problem::wppicds:
      return !s.empty() && partially_dominated(g, s, params.threshold) &&
             is_connected_subset(g, s);
  }
  return false;
}

std::optional<NodeSubset> brute_force_min(Problem problem, const WeightedGraph& g,
                                          const ProblemParams& params, std::size_t limit) {
  const std::size_t n = g.node_count();
  if (n > limit) {
    throw OracleLimit("exhaustive search refused: n = " + std::to_string(n) + " exceeds limit " +
                      std::to_string(limit));
  }
  std::vector<NodeId> combo;
  for (std::size_t k = 0; k <= n; ++k) {
    combo.resize(k);
    std::iota(combo.begin(), combo.end(), NodeId{0});
    while (true) {
      NodeSubset s = NodeSubset::from_nodes(n, combo);
      if (verify(problem, g, s, params)) return s;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Submodularity gap

Rational gap_of(const Potential& potential, const GapWitness& w, bool conditional) {
  const auto gain = [&](const NodeSubset& s) -> Rational {
    NodeSubset with = s;
    with.insert(w.x);
    return potential.value(with) - potential.value(s);
  };
  if (!conditional) return gain(w.b) - gain(w.a);
  NodeSubset joined = w.a;
  for (NodeId v : w.b.members()) joined.insert(v);
  return gain(joined) - gain(w.a);
}

namespace {

GapScanResult exhaustive_scan(const Potential& potential, const GapScanOptions& opt) {
  const auto& g = potential.graph();
  const std::size_t n = g.node_count();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<Rational> f(std::size_t{full} + 1);
  std::vector<std::uint8_t> connected(std::size_t{full} + 1, 0);
  for (std::uint32_t m = 0; m <= full; ++m) {
    NodeSubset s = NodeSubset::from_mask(n, m);
    f[m] = potential.value(s);
    connected[m] = is_connected_subset(g, s) ? 1 : 0;
  }

  GapScanResult r;
  r.conditional = opt.conditional;
  bool first = true;
  std::uint32_t best_a = 0, best_b = 0;
  NodeId best_x = 0;
  Rational gap;
  auto consider = [&](std::uint32_t a, std::uint32_t b, NodeId x, std::uint32_t big) {
    const std::uint32_t bit = std::uint32_t{1} << x;
    gap = (f[big | bit] - f[big]) - (f[a | bit] - f[a]);
    ++r.triples_scanned;
    if (first || gap > r.max_gap) {
      first = false;
      r.max_gap = gap;
      best_a = a;
      best_b = b;
      best_x = x;
    }
  };

  if (!opt.conditional) {
    for (std::uint32_t b = 0; b <= full; ++b) {
      // Every submask a of b, including 0.
      for (std::uint32_t a = b;; a = (a - 1) & b) {
        for (NodeId x = 0; x < n; ++x) {
          if (!(b >> x & 1U)) consider(a, b, x, b);
        }
        if (a == 0) break;
      }
    }
  } else {
    for (std::uint32_t b = 0; b <= full; ++b) {
      if (!connected[b]) continue;
      for (std::uint32_t a = 0; a <= full; ++a) {
        for (NodeId x = 0; x < n; ++x) {
          if (!(b >> x & 1U)) consider(a, b, x, a | b);
        }
      }
    }
  }
  r.witness = {NodeSubset::from_mask(n, best_a), NodeSubset::from_mask(n, best_b), best_x};
  return r;
}

NodeSubset random_connected(const WeightedGraph& g, std::mt19937_64& rng) {
  const std::size_t n = g.node_count();
  NodeSubset b(n);
  const std::size_t want = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  if (want == 0) return b;
  b.insert(static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)));
  std::vector<NodeId> frontier;
  while (b.size() < want) {
    frontier.clear();
    for (NodeId u : b.members()) {
      for (const auto& nb : g.neighbors(u)) {
        if (!b.contains(nb.node)) frontier.push_back(nb.node);
      }
    }
    if (frontier.empty()) break;
    b.insert(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
  }
  return b;
}

GapScanResult sampled_scan(const Potential& potential, const GapScanOptions& opt) {
  const auto& g = potential.graph();
  const std::size_t n = g.node_count();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coin(0, 2);

  GapScanResult r;
  r.conditional = opt.conditional;
  r.sampled = true;
  bool first = true;
  std::vector<NodeId> outside;
  for (std::uint64_t i = 0; i < opt.samples; ++i) {
    GapWitness w{NodeSubset(n), NodeSubset(n), 0};
    if (!opt.conditional) {
      for (NodeId v = 0; v < n; ++v) {
        const int c = coin(rng);
        if (c == 0) w.a.insert(v);
        if (c <= 1) w.b.insert(v);
      }
    } else {
      for (NodeId v = 0; v < n; ++v) {
        if (coin(rng) == 0) w.a.insert(v);
      }
      w.b = random_connected(g, rng);
    }
    outside.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (!w.b.contains(v)) outside.push_back(v);
    }
    if (outside.empty()) continue;
    w.x = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
    Rational gap = gap_of(potential, w, opt.conditional);
    ++r.triples_scanned;
    if (first || gap > r.max_gap) {
      first = false;
      r.max_gap = std::move(gap);
      r.witness = std::move(w);
    }
  }
  if (first) r.witness = {NodeSubset(n), NodeSubset(n), 0};
  return r;
}

}  // namespace

GapScanResult gap_scan(const Potential& potential, const GapScanOptions& options) {
  const std::size_t n = potential.graph().node_count();
  if (options.samples > 0) return sampled_scan(potential, options);
  if (n == 0) return GapScanResult{Rational(0), {}, options.conditional, false, 0};
  if (n > options.exhaustive_limit || n > 16) {
    throw OracleLimit("exhaustive gap scan refused: n = " + std::to_string(n) +
                      " exceeds limit " + std::to_string(options.exhaustive_limit) +
                      "; use sampling mode");
  }
  return exhaustive_scan(potential, options);
}

// ---------------------------------------------------------------------------
// ms(v)

Rational ms_oracle(const WeightedGraph& g, NodeId v, const ThresholdConfig& t,
                   std::size_t degree_limit) {
  const auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  if (d > degree_limit) {
    throw OracleLimit("degree " + std::to_string(d) + " of node " + std::to_string(v) +
                      " exceeds limit " + std::to_string(degree_limit));
  }
  const Rational theta = t.threshold(g, v);
  if (sgn(theta) <= 0) return Rational(0);

  // Gray-code walk over subsets of N(v): one weight added or removed per step.
  std::optional<Rational> best;
  Rational sum(0);
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i > 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      const std::uint64_t gray = i ^ (i >> 1);
      if (gray >> bit & 1U) {
        sum += nbrs[bit].weight;
      } else {
        sum -= nbrs[bit].weight;
      }
    }
    Rational gap = theta - sum;
    if (sgn(gap) > 0 && (!best || gap < *best)) best = std::move(gap);
  }
  return *best;  // the empty subset always contributes theta > 0
}

// ---------------------------------------------------------------------------
// Diffusion and orderings

Diffusion lt_closure(const WeightedGraph& g, const NodeSubset& seeds, const ThresholdConfig& t) {
  const std::size_t n = g.node_count();
  Diffusion d;
  d.activated = NodeSubset(n);
  for (NodeId v : seeds.sorted_members()) d.activated.insert(v);
  std::vector<Rational> theta;
  theta.reserve(n);
  for (NodeId v = 0; v < n; ++v) theta.push_back(t.threshold(g, v));

  while (true) {
    std::vector<NodeId> wave;
    for (NodeId v = 0; v < n; ++v) {
      if (!d.activated.contains(v) && weight_toward(g, v, d.activated) >= theta[v]) {
        wave.push_back(v);
      }
    }
    if (wave.empty()) break;
    for (NodeId v : wave) d.activated.insert(v);
    d.waves.push_back(std::move(wave));
    ++d.rounds;
  }
  return d;
}

std::vector<NodeId> prefix_connected_order(const WeightedGraph& g, const NodeSubset& c) {
  std::vector<NodeId> order;
  if (c.empty()) return order;
  const auto sorted = c.sorted_members();
  NodeSubset seen(g.node_count());
  std::queue<NodeId> queue;
  queue.push(sorted.front());
  seen.insert(sorted.front());
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    order.push_back(u);
    for (const auto& nb : g.neighbors(u)) {
      if (c.contains(nb.node) && seen.insert(nb.node)) queue.push(nb.node);
    }
  }
  if (order.size() != c.size()) throw GraphError("subset does not induce a connected subgraph");
  return order;
}

// ---------------------------------------------------------------------------
// Small connected graphs up to isomorphism

std::vector<WeightedGraph> connected_graphs(std::size_t n) {
  if (n > 7) throw OracleLimit("connected_graphs supports n <= 7");
  std::vector<WeightedGraph> out;
  if (n == 0) return out;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      pair_index[u][v] = pair_index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(u, v);
    }
  }
  std::vector<std::vector<NodeId>> perms;
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), NodeId{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::uint32_t masks = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    DisjointSets ds(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1U) ds.unite(pairs[e].first, pairs[e].second);
    }
    if (ds.set_count() != 1) continue;
    bool canonical = true;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1U) image |= std::uint32_t{1} << pair_index[perm[pairs[e].first]][perm[pairs[e].second]];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1U) edges.push_back(pairs[e]);
    }
    out.push_back(WeightedGraph::unit(n, edges));
  }
  return out;
}

}  // namespace domgreedy
