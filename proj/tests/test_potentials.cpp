#include "domgreedy/oracle.hpp"
#include "domgreedy/potentials.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace domgreedy;
using testsupport::path;

namespace {

NodeSubset set_of(std::size_t n, std::vector<NodeId> v) { return NodeSubset::from_nodes(n, v); }

// Small graph pool: every connected unit graph up to n = 5 plus random
// weighted graphs, some of them disconnected.
std::vector<WeightedGraph> graph_pool(bool connected_only) {
  std::vector<WeightedGraph> pool;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto& g : connected_graphs(n)) pool.push_back(std::move(g));
  }
  std::mt19937_64 rng(2024);
  while (pool.size() < 60) {
    auto g = testsupport::random_weighted(rng, 3 + pool.size() % 3, 6);
    if (!connected_only || is_connected(g)) pool.push_back(std::move(g));
  }
  return pool;
}

std::vector<std::unique_ptr<Potential>> all_potentials(const WeightedGraph& g) {
  std::vector<std::unique_ptr<Potential>> out;
  ThresholdConfig half;
  out.push_back(tds_potential(g));
  for (unsigned m = 1; m <= 3; ++m) out.push_back(ft_total_potential(g, m));
  out.push_back(wppids_potential(g, half));
  out.push_back(wppids_potential(g, ThresholdConfig{make_rational(2, 3), false}));
  out.push_back(wppitds_potential(g, half));
  if (g.node_count() >= 2 && is_connected(g)) out.push_back(wppicds_potential(g, half));
  if (g.weight_mode() == WeightMode::unit) {
    out.push_back(wppids_potential(g, ThresholdConfig{make_rational(1, 2), true}));
  }
  return out;
}

}  // namespace

TEST_CASE("total domination potential") {
  auto star = testsupport::star(3);
  auto f = tds_potential(star);
  CHECK(f->value(NodeSubset(4)) == 0);
  CHECK(f->value(set_of(4, {0})) == 3);
  CHECK(f->target() == 4);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      CHECK(tds_potential(g)->value(NodeSubset::full(n)) == n);
    }
  }
}

TEST_CASE("fault-tolerant total potential") {
  auto k4 = testsupport::complete(4);
  auto f = ft_total_potential(k4, 2);
  CHECK(f->value(set_of(4, {0})) == 4);
  CHECK(f->target() == 8);
  CHECK(f->value(NodeSubset::full(4)) == 8);
  CHECK_THROWS_AS(ft_total_potential(k4, 0), std::invalid_argument);

  SUBCASE("m = 1 coincides with total domination") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& g : connected_graphs(n)) {
        auto tds = tds_potential(g);
        auto ft1 = ft_total_potential(g, 1);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          auto s = NodeSubset::from_mask(n, m);
          CHECK(ft1->value(s) == tds->value(s));
        }
      }
    }
  }
}

TEST_CASE("partial positive influence potential") {
  auto p3 = path(3);
  ThresholdConfig half;
  auto h = wppids_potential(p3, half);
  CHECK(h->value(NodeSubset(3)) == 0);
  CHECK(h->value(set_of(3, {1})) == 2);
  CHECK(h->target() == 2);
  CHECK(h->value(NodeSubset::full(3)) == 2);

  auto g = WeightedGraph::from_edges(3, {{0, 1, make_rational(1, 2)}, {0, 2, make_rational(1, 3)}});
  auto hw = wppids_potential(g, half);
  // thetas: 5/12, 1/4, 1/6
  CHECK(hw->target() == make_rational(5, 6));
  CHECK(hw->value(set_of(3, {1})) == make_rational(1, 4) + make_rational(5, 12));
  CHECK(hw->value(set_of(3, {2})) == make_rational(1, 6) + make_rational(1, 3));
}

TEST_CASE("total partial influence potential") {
  auto p3 = path(3);
  auto g = wppitds_potential(p3, ThresholdConfig{});
  CHECK(g->value(set_of(3, {1})) == 3);
  CHECK(g->target() == make_rational(7, 2));
  CHECK(g->value(set_of(3, {0, 1})) == make_rational(7, 2));
  CHECK(g->value(NodeSubset(3)) == 0);
}

TEST_CASE("connected partial influence potential") {
  auto p4 = path(4);
  auto f = wppicds_potential(p4, ThresholdConfig{});
  CHECK(f->connectivity_conditional());
  CHECK(f->value(NodeSubset(4)) == 0);
  CHECK(f->value(set_of(4, {1, 2})) == 4);
  CHECK(f->target() == 4);
  // h({1}) = 1/2 + 1 + 1 + 0 (node 2 already meets its threshold), c = 1/2.
  CHECK(f->value(set_of(4, {1})) == 3);

  CHECK_THROWS_AS(wppicds_potential(WeightedGraph::unit(3, std::vector<std::pair<NodeId, NodeId>>{{0, 1}}),
                                    ThresholdConfig{}),
                  InfeasibleInstance);
  CHECK_THROWS_AS(wppicds_potential(WeightedGraph::from_edges(1, {}), ThresholdConfig{}),
                  InfeasibleInstance);
}

TEST_CASE("ceiling mode needs unit weights") {
  auto g = WeightedGraph::from_edges(2, {{0, 1, make_rational(1, 2)}});
  CHECK_THROWS_AS(wppids_potential(g, ThresholdConfig{make_rational(1, 2), true}), GraphError);
}

TEST_CASE("marginal equals the difference of from-scratch values") {
  for (const auto& g : graph_pool(false)) {
    const std::size_t n = g.node_count();
    for (const auto& f : all_potentials(g)) {
      CHECK(f->value(NodeSubset(n)) == 0);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto a = NodeSubset::from_mask(n, m);
        auto state = f->state_for(a);
        CHECK(state->value() == f->value(a));
        for (NodeId x = 0; x < n; ++x) {
          auto with = a;
          with.insert(x);
          CHECK_MESSAGE(state->marginal(x) == f->value(with) - f->value(a), f->name());
        }
      }
    }
  }
}

TEST_CASE("potentials are monotone") {
  for (const auto& g : graph_pool(false)) {
    const std::size_t n = g.node_count();
    for (const auto& f : all_potentials(g)) {
      std::vector<Rational> table;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        table.push_back(f->value(NodeSubset::from_mask(n, m)));
      }
      for (std::uint64_t b = 0; b < table.size(); ++b) {
        for (std::uint64_t a = b;; a = (a - 1) & b) {
          CHECK_MESSAGE(table[a] <= table[b], f->name());
          if (a == 0) break;
        }
      }
    }
  }
}

TEST_CASE("monotone spot checks on larger graphs") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 8 + i % 5;
    auto g = testsupport::random_weighted(rng, n, 5, 0.4);
    for (const auto& f : all_potentials(g)) {
      for (int k = 0; k < 20; ++k) {
        std::uint64_t b = rng() & ((std::uint64_t{1} << n) - 1);
        std::uint64_t a = b & rng();
        CHECK(f->value(NodeSubset::from_mask(n, a)) <= f->value(NodeSubset::from_mask(n, b)));
      }
    }
  }
}

TEST_CASE("incremental state matches from-scratch evaluation along random insertions") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 6 + i % 7;
    auto g = testsupport::random_weighted(rng, n, 6, 0.45);
    for (const auto& f : all_potentials(g)) {
      std::vector<NodeId> order(n);
      for (NodeId v = 0; v < n; ++v) order[v] = v;
      std::shuffle(order.begin(), order.end(), rng);
      auto state = f->start();
      NodeSubset a(n);
      for (NodeId x : order) {
        auto with = a;
        with.insert(x);
        CHECK(state->marginal(x) == f->value(with) - f->value(a));
        state->insert(x);
        a.insert(x);
        CHECK(state->value() == f->value(a));
      }
      auto copy = state->clone();
      CHECK(copy->value() == state->value());
    }
  }
}

TEST_CASE("additivity identities hold exhaustively on small graphs") {
  for (const auto& g : graph_pool(false)) {
    const std::size_t n = g.node_count();
    auto tds = tds_potential(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      auto a = NodeSubset::from_mask(n, m);
      auto k = tds_satisfied(g, a);
      for (NodeId x = 0; x < n; ++x) {
        if (a.contains(x)) continue;
        auto with = a;
        with.insert(x);
        CHECK(tds->value(with) == tds->value(a) + neighbors_outside(g, x, k));
      }
      for (unsigned mm = 1; mm <= 3; ++mm) {
        auto ft = ft_total_potential(g, mm);
        auto kft = ft_satisfied(g, a, mm);
        for (NodeId x = 0; x < n; ++x) {
          if (a.contains(x)) continue;
          auto with = a;
          with.insert(x);
          const auto t = ft_self_increment(g, a, x, mm);
          CHECK(t == ft_node_level(g, with, x, mm) - ft_node_level(g, a, x, mm));
          CHECK(ft->value(with) == ft->value(a) + neighbors_outside(g, x, kft) + t);
        }
      }
    }
  }
}

TEST_CASE("problem names round-trip") {
  for (Problem p : {Problem::tds, Problem::mtds, Problem::wppids, Problem::wppitds, Problem::wppicds}) {
    CHECK(parse_problem(problem_name(p)) == p);
  }
  CHECK_FALSE(parse_problem("cds").has_value());
}
