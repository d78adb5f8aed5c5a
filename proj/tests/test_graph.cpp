#include "domgreedy/graph.hpp"
#include "domgreedy/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace domgreedy;
using testsupport::path;

TEST_CASE("parse_graph reads the edge-list format") {
  SUBCASE("unit path") {
    auto g = parse_graph("3\n0 1 1\n1 2 1");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.weight_mode() == WeightMode::unit);
    CHECK(g == path(3));
  }
  SUBCASE("rational weight") {
    auto g = parse_graph("2\n0 1 1/3");
    REQUIRE(g.edge_count() == 1);
    CHECK(g.neighbors(0)[0].weight == make_rational(1, 3));
    CHECK(g.weight_mode() == WeightMode::rational);
  }
  SUBCASE("comments, blank lines and omitted weights") {
    auto g = parse_graph("# header\n\n4\n# edge list\n0 1\n1 2 2/2\n\t2 3   1\r\n");
    CHECK(g == path(4));
  }
}

TEST_CASE("parse_graph reports errors with line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("2\n0 0 1") == 2);                  // self-loop
  CHECK(line_of("3\n0 1\n# c\n1 0 1") == 4);        // duplicate
  CHECK(line_of("2\n0 2") == 2);                    // out of range
  CHECK(line_of("2\n0 1 0") == 2);                  // zero weight
  CHECK(line_of("2\n0 1 -1/2") == 2);               // negative weight
  CHECK(line_of("2\n0 1 0.5") == 2);                // decimal
  CHECK(line_of("2\n0 1 1 1") == 2);                // too many fields
  CHECK(line_of("x\n") == 1);                       // bad count
  CHECK(line_of("2\n0 a") == 2);
  CHECK_THROWS_AS(parse_graph("# only a comment\n"), ParseError);
}

TEST_CASE("from_edges rejects malformed graphs") {
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 0, Rational(1)}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, Rational(1)}, {1, 0, Rational(2)}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, Rational(0)}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 5, Rational(1)}}), GraphError);
}

TEST_CASE("adjacency is symmetric with identical weights") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto g = testsupport::random_weighted(rng, 7, 6);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (const auto& nb : g.neighbors(u)) {
        bool found = false;
        for (const auto& back : g.neighbors(nb.node)) {
          if (back.node == u) {
            found = true;
            CHECK(back.weight == nb.weight);
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("parse then serialize round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 9;
    auto g = testsupport::random_weighted(rng, n, 1 + i % 6);
    auto text = serialize_graph(g);
    auto back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
}

TEST_CASE("weight_toward sums weights into the set") {
  auto p3 = path(3);
  CHECK(weight_toward(p3, 1, NodeSubset::from_nodes(3, std::vector<NodeId>{0})) == 1);
  CHECK(weight_toward(p3, 1, NodeSubset(3)) == 0);
  auto g = WeightedGraph::from_edges(3, {{0, 1, make_rational(1, 2)}, {0, 2, make_rational(1, 3)}});
  CHECK(weight_toward(g, 0, NodeSubset::from_nodes(3, std::vector<NodeId>{1, 2})) == make_rational(5, 6));
  CHECK(g.total_weight(0) == make_rational(5, 6));
  CHECK(g.max_total_weight() == make_rational(5, 6));
}

TEST_CASE("weight_toward is monotone in the set") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto g = testsupport::random_weighted(rng, 6, 6);
    for (std::uint64_t b = 0; b < 64; ++b) {
      for (std::uint64_t a = b;; a = (a - 1) & b) {
        auto sa = NodeSubset::from_mask(6, a);
        auto sb = NodeSubset::from_mask(6, b);
        for (NodeId v = 0; v < 6; ++v) CHECK(weight_toward(g, v, sa) <= weight_toward(g, v, sb));
        if (a == 0) break;
      }
    }
  }
}

TEST_CASE("node_lcm and graph_lcm") {
  ThresholdConfig half;
  CHECK(node_lcm(path(3), 1, half) == 1);           // theta = 1, unit weights
  CHECK(node_lcm(testsupport::star(3), 0, half) == 2);  // theta = 3/2
  auto g = WeightedGraph::from_edges(3, {{0, 1, make_rational(1, 2)}, {0, 2, make_rational(1, 3)}});
  CHECK(half.threshold(g, 0) == make_rational(5, 12));
  CHECK(node_lcm(g, 0, half) == 12);

  CHECK(graph_lcm(path(3), half) == 2);
  ThresholdConfig ceiling{make_rational(1, 2), true};
  CHECK(graph_lcm(path(3), ceiling) == 1);
  CHECK(graph_lcm(testsupport::star(5), ceiling) == 1);
  CHECK(graph_lcm(WeightedGraph::from_edges(1, {}), half) == 1);
}

TEST_CASE("threshold configuration validation") {
  auto weighted = WeightedGraph::from_edges(2, {{0, 1, make_rational(1, 2)}});
  CHECK_THROWS_AS((ThresholdConfig{make_rational(1, 2), true}.validate(weighted)), GraphError);
  CHECK_THROWS_AS((ThresholdConfig{Rational(0), false}.validate(weighted)), GraphError);
  CHECK_THROWS_AS((ThresholdConfig{make_rational(3, 2), false}.validate(weighted)), GraphError);
  CHECK_NOTHROW((ThresholdConfig{Rational(1), false}.validate(weighted)));
  ThresholdConfig ceiling{make_rational(1, 2), true};
  CHECK(ceiling.threshold(testsupport::star(3), 0) == 2);
}

TEST_CASE("component counts on P4") {
  auto p4 = path(4);
  auto set = [](std::vector<NodeId> v) { return NodeSubset::from_nodes(4, v); };
  CHECK(induced_components(p4, set({1, 2})) == 1);
  CHECK(induced_components(p4, set({0, 3})) == 2);
  CHECK(induced_components(p4, set({})) == 0);
  CHECK(covering_components(p4, set({})) == 4);
  CHECK(covering_components(p4, set({1})) == 2);
  CHECK(covering_components(p4, set({1, 2})) == 1);
  CHECK(is_connected_subset(p4, set({1, 2})));
  CHECK_FALSE(is_connected_subset(p4, set({0, 3})));
  CHECK(is_connected_subset(p4, set({3})));
  CHECK(is_connected_subset(p4, set({})));
}

TEST_CASE("component counts agree with depth-first search") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto g = testsupport::random_weighted(rng, 7, 3, 0.35);
    for (std::uint64_t m = 0; m < 128; ++m) {
      auto a = NodeSubset::from_mask(7, m);
      auto p = testsupport::count_components(
          g, [&](NodeId v) { return a.contains(v); }, [](NodeId, NodeId) { return true; });
      auto q = testsupport::count_components(
          g, [](NodeId) { return true; },
          [&](NodeId u, NodeId v) { return a.contains(u) || a.contains(v); });
      CHECK(induced_components(g, a) == p);
      CHECK(covering_components(g, a) == q);
    }
  }
}

TEST_CASE("|V| - q(A) - p(A) is non-decreasing on connected graphs") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      auto c = [&](std::uint64_t m) {
        auto s = NodeSubset::from_mask(n, m);
        return static_cast<long>(n) - static_cast<long>(covering_components(g, s)) -
               static_cast<long>(induced_components(g, s));
      };
      for (std::uint64_t m = 0; m <= full; ++m) {
        for (NodeId x = 0; x < n; ++x) {
          if (!(m >> x & 1U)) CHECK(c(m | (std::uint64_t{1} << x)) >= c(m));
        }
      }
    }
  }
}

TEST_CASE("NodeSubset keeps membership and order consistent") {
  NodeSubset s(5);
  CHECK(s.insert(3));
  CHECK(s.insert(1));
  CHECK_FALSE(s.insert(3));
  CHECK(s.size() == 2);
  CHECK(s.members()[0] == 3);
  CHECK(s.sorted_members() == std::vector<NodeId>{1, 3});
  CHECK(s.mask() == 0b1010);
  CHECK(NodeSubset::from_mask(5, 0b1010) == s);
  CHECK_THROWS(NodeSubset::from_nodes(2, std::vector<NodeId>{2}));
}
