#include "domgreedy/potentials.hpp"

#include <algorithm>

namespace domgreedy {

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::tds: return "tds";
    case Problem::mtds: return "mtds";
    case Problem::wppids: return "wppids";
    case Problem::wppitds: return "wppitds";
    case Problem::wppicds: return "wppicds";
  }
  return "?";
}

std::optional<Problem> parse_problem(std::string_view name) {
  for (Problem p : {Problem::tds, Problem::mtds, Problem::wppids, Problem::wppitds,
                    Problem::wppicds}) {
    if (problem_name(p) == name) return p;
  }
  return std::nullopt;
}

Rational Potential::marginal(const NodeSubset& a, NodeId x) const {
  return state_for(a)->marginal(x);
}

std::unique_ptr<PotentialState> Potential::state_for(const NodeSubset& a) const {
  auto state = start();
  for (NodeId v : a.members()) state->insert(v);
  return state;
}

// ---------------------------------------------------------------------------
// Closed forms

NodeSubset tds_satisfied(const WeightedGraph& g, const NodeSubset& a) {
  NodeSubset k(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (a.contains(nb.node)) {
        k.insert(v);
        break;
      }
    }
  }
  return k;
}

namespace {

std::size_t count_in(const WeightedGraph& g, NodeId v, const NodeSubset& a) {
  std::size_t c = 0;
  for (const auto& nb : g.neighbors(v)) c += a.contains(nb.node) ? 1 : 0;
  return c;
}

unsigned ft_level(bool member, std::size_t in_count, unsigned m) {
  if (member) return in_count > 0 ? m : m - 1;
  return static_cast<unsigned>(std::min<std::size_t>(in_count, m));
}

}  // namespace

unsigned ft_node_level(const WeightedGraph& g, const NodeSubset& a, NodeId v, unsigned m) {
  return ft_level(a.contains(v), count_in(g, v, a), m);
}

NodeSubset ft_satisfied(const WeightedGraph& g, const NodeSubset& a, unsigned m) {
  NodeSubset k(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (ft_node_level(g, a, v, m) == m) k.insert(v);
  }
  return k;
}

unsigned ft_self_increment(const WeightedGraph& g, const NodeSubset& a, NodeId x, unsigned m) {
  if (ft_node_level(g, a, x, m) == m) return 0;
  const auto c = count_in(g, x, a);
  return c > 0 ? m - static_cast<unsigned>(c) : m - 1;
}

std::size_t neighbors_outside(const WeightedGraph& g, NodeId x, const NodeSubset& k) {
  std::size_t c = 0;
  for (const auto& nb : g.neighbors(x)) c += k.contains(nb.node) ? 0 : 1;
  return c;
}

namespace {

// ---------------------------------------------------------------------------
// Shared incremental pieces

// Neighbor counts into A; drives both total-domination style potentials.
struct CountCore {
  std::vector<std::uint32_t> in_count;
  std::vector<std::uint8_t> member;

  explicit CountCore(std::size_t n) : in_count(n, 0), member(n, 0) {}

  // Gain of the total domination potential when x joins.
  std::size_t tds_gain(const WeightedGraph& g, NodeId x) const {
    std::size_t gain = 0;
    for (const auto& nb : g.neighbors(x)) gain += in_count[nb.node] == 0 ? 1 : 0;
    return gain;
  }

  void insert(const WeightedGraph& g, NodeId x) {
    member[x] = 1;
    for (const auto& nb : g.neighbors(x)) ++in_count[nb.node];
  }
};

// Per-node progress W_A(v) toward theta_v.
struct ThresholdCore {
  std::vector<Rational> theta;
  std::vector<Rational> toward;
  std::vector<std::uint8_t> member;

  ThresholdCore(const WeightedGraph& g, const ThresholdConfig& t)
      : toward(g.node_count(), Rational(0)), member(g.node_count(), 0) {
    theta.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) theta.push_back(t.threshold(g, v));
  }

  Rational level(NodeId v) const {
    if (member[v] || toward[v] >= theta[v]) return theta[v];
    return toward[v];
  }

  Rational gain(const WeightedGraph& g, NodeId x) const {
    if (member[x]) return Rational(0);
    Rational sum = theta[x] - level(x);
    for (const auto& nb : g.neighbors(x)) {
      const NodeId v = nb.node;
      if (member[v] || toward[v] >= theta[v]) continue;
      Rational reached = toward[v] + nb.weight;
      sum += (reached < theta[v] ? reached : theta[v]) - toward[v];
    }
    return sum;
  }

  void insert(const WeightedGraph& g, NodeId x) {
    member[x] = 1;
    for (const auto& nb : g.neighbors(x)) toward[nb.node] += nb.weight;
  }
};

Rational threshold_value(const WeightedGraph& g, const ThresholdConfig& t, const NodeSubset& a) {
  Rational sum(0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Rational theta = t.threshold(g, v);
    Rational toward = weight_toward(g, v, a);
    if (a.contains(v) || toward >= theta) {
      sum += theta;
    } else {
      sum += toward;
    }
  }
  return sum;
}

Rational threshold_target(const WeightedGraph& g, const ThresholdConfig& t) {
  Rational sum(0);
  for (NodeId v = 0; v < g.node_count(); ++v) sum += t.threshold(g, v);
  return sum;
}

Rational tds_value(const WeightedGraph& g, const NodeSubset& a) {
  return Rational(static_cast<unsigned long>(tds_satisfied(g, a).size()));
}

Rational inverse(const Natural& l) {
  Rational r(Natural(1), l);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Total domination

class TdsState final : public PotentialState {
 public:
  explicit TdsState(const WeightedGraph& g) : PotentialState(g.node_count()), g_(&g), core_(g.node_count()) {}

  Rational marginal(NodeId x) const override {
    if (core_.member[x]) return Rational(0);
    return Rational(static_cast<unsigned long>(core_.tds_gain(*g_, x)));
  }

  void insert(NodeId x) override {
    if (!members_.insert(x)) return;
    value_ += Rational(static_cast<unsigned long>(core_.tds_gain(*g_, x)));
    core_.insert(*g_, x);
  }

  std::unique_ptr<PotentialState> clone() const override { return std::make_unique<TdsState>(*this); }

 private:
  const WeightedGraph* g_;
  CountCore core_;
};

class TdsPotential final : public Potential {
 public:
  explicit TdsPotential(const WeightedGraph& g) : Potential(g) {
    target_ = Rational(static_cast<unsigned long>(g.node_count()));
  }
  std::string name() const override { return "tds"; }
  Problem problem() const override { return Problem::tds; }
  Rational value(const NodeSubset& a) const override { return tds_value(*graph_, a); }
  std::unique_ptr<PotentialState> start() const override {
    return std::make_unique<TdsState>(*graph_);
  }
};

// ---------------------------------------------------------------------------
// Fault-tolerant total domination

class FtTotalState final : public PotentialState {
 public:
  FtTotalState(const WeightedGraph& g, unsigned m)
      : PotentialState(g.node_count()), g_(&g), m_(m), core_(g.node_count()) {}

  Rational marginal(NodeId x) const override { return Rational(static_cast<long>(gain(x))); }

  void insert(NodeId x) override {
    if (core_.member[x]) return;
    members_.insert(x);
    value_ += Rational(static_cast<long>(gain(x)));
    core_.insert(*g_, x);
  }

  std::unique_ptr<PotentialState> clone() const override {
    return std::make_unique<FtTotalState>(*this);
  }

 private:
  long gain(NodeId x) const {
    if (core_.member[x]) return 0;
    const auto cx = core_.in_count[x];
    long delta = static_cast<long>(ft_level(true, cx, m_)) - static_cast<long>(ft_level(false, cx, m_));
    for (const auto& nb : g_->neighbors(x)) {
      const NodeId v = nb.node;
      const bool in = core_.member[v] != 0;
      const auto c = core_.in_count[v];
      delta += static_cast<long>(ft_level(in, c + 1, m_)) - static_cast<long>(ft_level(in, c, m_));
    }
    return delta;
  }

  const WeightedGraph* g_;
  unsigned m_;
  CountCore core_;
};

class FtTotalPotential final : public Potential {
 public:
  FtTotalPotential(const WeightedGraph& g, unsigned m) : Potential(g), m_(m) {
    if (m == 0) throw std::invalid_argument("fault tolerance m must be at least 1");
    target_ = Rational(static_cast<unsigned long>(m)) * static_cast<unsigned long>(g.node_count());
  }
  std::string name() const override { return "mtds(m=" + std::to_string(m_) + ")"; }
  Problem problem() const override { return Problem::mtds; }
  Rational value(const NodeSubset& a) const override {
    unsigned long sum = 0;
    for (NodeId v = 0; v < graph_->node_count(); ++v) sum += ft_node_level(*graph_, a, v, m_);
    return Rational(sum);
  }
  std::unique_ptr<PotentialState> start() const override {
    return std::make_unique<FtTotalState>(*graph_, m_);
  }

 private:
  unsigned m_;
};

// ---------------------------------------------------------------------------
// Weighted partial positive influence

class WppidsState final : public PotentialState {
 public:
  WppidsState(const WeightedGraph& g, const ThresholdConfig& t)
      : PotentialState(g.node_count()), g_(&g), core_(g, t) {}

  Rational marginal(NodeId x) const override { return core_.gain(*g_, x); }

  void insert(NodeId x) override {
    if (!members_.insert(x)) return;
    value_ += core_.gain(*g_, x);
    core_.insert(*g_, x);
  }

  std::unique_ptr<PotentialState> clone() const override {
    return std::make_unique<WppidsState>(*this);
  }

 private:
  const WeightedGraph* g_;
  ThresholdCore core_;
};

class WppidsPotential final : public Potential {
 public:
  WppidsPotential(const WeightedGraph& g, const ThresholdConfig& t) : Potential(g), t_(t) {
    t_.validate(g);
    target_ = threshold_target(g, t_);
  }
  std::string name() const override { return "wppids"; }
  Problem problem() const override { return Problem::wppids; }
  Rational value(const NodeSubset& a) const override { return threshold_value(*graph_, t_, a); }
  std::unique_ptr<PotentialState> start() const override {
    return std::make_unique<WppidsState>(*graph_, t_);
  }

 private:
  ThresholdConfig t_;
};

class WppitdsState final : public PotentialState {
 public:
  WppitdsState(const WeightedGraph& g, const ThresholdConfig& t, Rational inv_l)
      : PotentialState(g.node_count()), g_(&g), inv_l_(std::move(inv_l)), h_(g, t), f_(g.node_count()) {}

  Rational marginal(NodeId x) const override {
    if (h_.member[x]) return Rational(0);
    return h_.gain(*g_, x) + inv_l_ * static_cast<unsigned long>(f_.tds_gain(*g_, x));
  }

  void insert(NodeId x) override {
    if (!members_.insert(x)) return;
    value_ += marginal(x);
    h_.insert(*g_, x);
    f_.insert(*g_, x);
  }

  std::unique_ptr<PotentialState> clone() const override {
    return std::make_unique<WppitdsState>(*this);
  }

 private:
  const WeightedGraph* g_;
  Rational inv_l_;
  ThresholdCore h_;
  CountCore f_;
};

class WppitdsPotential final : public Potential {
 public:
  WppitdsPotential(const WeightedGraph& g, const ThresholdConfig& t) : Potential(g), t_(t) {
    t_.validate(g);
    inv_l_ = inverse(graph_lcm(g, t_));
    target_ = threshold_target(g, t_) + inv_l_ * static_cast<unsigned long>(g.node_count());
  }
  std::string name() const override { return "wppitds"; }
  Problem problem() const override { return Problem::wppitds; }
  Rational value(const NodeSubset& a) const override {
    return threshold_value(*graph_, t_, a) + inv_l_ * tds_value(*graph_, a);
  }
  std::unique_ptr<PotentialState> start() const override {
    return std::make_unique<WppitdsState>(*graph_, t_, inv_l_);
  }

 private:
  ThresholdConfig t_;
  Rational inv_l_;
};

// Connectivity term c(A) = (|V| - q(A) - p(A)) / L tracked with two
// merge-only union-find structures: one over the covering edges (q) and one
// over the members (p).
class WppicdsState final : public PotentialState {
 public:
  WppicdsState(const WeightedGraph& g, const ThresholdConfig& t, Rational inv_l)
      : PotentialState(g.node_count()),
        g_(&g),
        inv_l_(std::move(inv_l)),
        h_(g, t),
        covering_(g.node_count()),
        induced_(g.node_count()) {}

  Rational marginal(NodeId x) const override {
    if (h_.member[x]) return Rational(0);
    return h_.gain(*g_, x) + inv_l_ * connectivity_gain(x);
  }

  void insert(NodeId x) override {
    if (!members_.insert(x)) return;
    value_ += marginal(x);
    h_.insert(*g_, x);
    for (const auto& nb : g_->neighbors(x)) {
      covering_.unite(x, nb.node);
      if (h_.member[nb.node]) induced_.unite(x, nb.node);
    }
  }

  std::unique_ptr<PotentialState> clone() const override {
    return std::make_unique<WppicdsState>(*this);
  }

 private:
  // -(delta q) - (delta p); never negative on a graph without isolated nodes.
  long connectivity_gain(NodeId x) const {
    std::vector<NodeId> roots;
    roots.reserve(g_->degree(x) + 1);
    roots.push_back(covering_.find(x));
    for (const auto& nb : g_->neighbors(x)) roots.push_back(covering_.find(nb.node));
    const long q_drop = static_cast<long>(distinct(roots)) - 1;

    roots.clear();
    for (const auto& nb : g_->neighbors(x)) {
      if (h_.member[nb.node]) roots.push_back(induced_.find(nb.node));
    }
    const long p_rise = 1 - static_cast<long>(distinct(roots));
    return q_drop - p_rise;
  }

  static std::size_t distinct(std::vector<NodeId>& v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }

  const WeightedGraph* g_;
  Rational inv_l_;
  ThresholdCore h_;
  DisjointSets covering_;
  DisjointSets induced_;
};

class WppicdsPotential final : public Potential {
 public:
  WppicdsPotential(const WeightedGraph& g, const ThresholdConfig& t) : Potential(g), t_(t) {
    t_.validate(g);
    if (g.node_count() < 2 || !is_connected(g)) {
      throw InfeasibleInstance(
          "connected dominating variants need a connected graph with at least two nodes");
    }
    inv_l_ = inverse(graph_lcm(g, t_));
    target_ = threshold_target(g, t_) + inv_l_ * static_cast<unsigned long>(g.node_count() - 2);
  }
  std::string name() const override { return "wppicds"; }
  Problem problem() const override { return Problem::wppicds; }
  bool connectivity_conditional() const override { return true; }
  Rational value(const NodeSubset& a) const override {
    const long n = static_cast<long>(graph_->node_count());
    const long c = n - static_cast<long>(covering_components(*graph_, a)) -
                   static_cast<long>(induced_components(*graph_, a));
    return threshold_value(*graph_, t_, a) + inv_l_ * c;
  }
  std::unique_ptr<PotentialState> start() const override {
    return std::make_unique<WppicdsState>(*graph_, t_, inv_l_);
  }

 private:
  ThresholdConfig t_;
  Rational inv_l_;
};

}  // namespace

std::unique_ptr<Potential> tds_potential(const WeightedGraph& g) {
  return std::make_unique<TdsPotential>(g);
}

std::unique_ptr<Potential> ft_total_potential(const WeightedGraph& g, unsigned m) {
  return std::make_unique<FtTotalPotential>(g, m);
}

std::unique_ptr<Potential> wppids_potential(const WeightedGraph& g, const ThresholdConfig& t) {
  return std::make_unique<WppidsPotential>(g, t);
}

std::unique_ptr<Potential> wppitds_potential(const WeightedGraph& g, const ThresholdConfig& t) {
  return std::make_unique<WppitdsPotential>(g, t);
}

std::unique_ptr<Potential> wppicds_potential(const WeightedGraph& g, const ThresholdConfig& t) {
  return std::make_unique<WppicdsPotential>(g, t);
}

std::unique_ptr<Potential> make_potential(Problem problem, const WeightedGraph& g,
                                          const ProblemParams& params) {
  switch (problem) {
    case Problem::tds: return tds_potential(g);
    case Problem::mtds: return ft_total_potential(g, params.m);
    case Problem::wppids: return wppids_potential(g, params.threshold);
    case Problem::wppitds: return wppitds_potential(g, params.threshold);
    case Problem::wppicds: return wppicds_potential(g, params.threshold);
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace domgreedy
