#include "doctest.h"

#include "helpers.hpp"
#include "suptrop/digraph.hpp"
#include "suptrop/selfcheck/generators.hpp"
#include "suptrop/selfcheck/oracle.hpp"

using namespace suptrop;
using suptrop::testing::sparse;

namespace {
// 1-based edge lists keep the fixtures readable.
SupportDigraph graph(std::size_t n, std::initializer_list<Edge> one_based) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : one_based) edges.emplace_back(u - 1, v - 1);
  return SupportDigraph(n, edges);
}

std::vector<Edge> one_based(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  for (const auto& [u, v] : edges) out.emplace_back(u + 1, v + 1);
  return out;
}
}  // namespace

TEST_CASE("support") {
  CHECK(support(zero_matrix<SuperScalar>(3)).edge_count() == 0);
  CHECK(support(sparse(2, {{1, 2, SuperScalar::ghost(3)}})).has_edge(0, 1));
  CHECK(support(sparse(2, {{1, 2, SuperScalar(eps, -7)}})).has_edge(0, 1));
  CHECK(one_based(support(sparse(3, {{2, 1, 4}})).edges()) == std::vector<Edge>{{2, 1}});
}

TEST_CASE("SupportDigraph dedupes and validates") {
  const SupportDigraph g = graph(3, {{1, 2}, {1, 2}, {3, 1}});
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(graph(2, {{1, 3}}), InvalidArgument);
}

TEST_CASE("dump_edges: sorted, 1-based") {
  CHECK(dump_edges(graph(3, {{3, 1}, {2, 3}, {1, 3}, {2, 1}})) == "1 3\n2 1\n2 3\n3 1\n");
  CHECK(dump_edges(graph(2, {})).empty());
}

TEST_CASE("find_cycle") {
  const auto two = find_cycle(graph(2, {{1, 2}, {2, 1}}));
  REQUIRE(two);
  CHECK(two->vertices == std::vector<Vertex>{0, 1});

  const auto loop = find_cycle(graph(1, {{1, 1}}));
  REQUIRE(loop);
  CHECK(loop->vertices == std::vector<Vertex>{0});

  CHECK_FALSE(find_cycle(graph(3, {{2, 1}, {3, 1}, {2, 3}})));

  // Reached only after the acyclic prefix from vertex 1 is exhausted.
  const SupportDigraph g = graph(5, {{1, 2}, {3, 4}, {4, 5}, {5, 3}});
  const auto later = find_cycle(g);
  REQUIRE(later);
  CHECK(later->vertices == std::vector<Vertex>{2, 3, 4});
  CHECK(later->witnesses(g));
  CHECK_FALSE(CycleWitness{{2, 4, 3}}.witnesses(g));
}

TEST_CASE("find_cycle handles long chains iteratively") {
  std::vector<Edge> edges;
  const std::size_t n = 200000;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  CHECK_FALSE(find_cycle(SupportDigraph(n, edges)));
  edges.emplace_back(n - 1, 0);
  const auto cycle = find_cycle(SupportDigraph(n, edges));
  REQUIRE(cycle);
  CHECK(cycle->vertices.size() == n);
}

TEST_CASE("topological_order: Kahn with smallest index first") {
  CHECK(topological_order(graph(3, {})) == Permutation::identity(3));
  CHECK(topological_order(graph(2, {{1, 2}})) == Permutation::identity(2));
  // ℓ = {2↦1, 3↦2, 1↦3}, 0-based labels
  CHECK(topological_order(graph(3, {{2, 1}, {3, 1}, {2, 3}})) == Permutation({2, 0, 1}));
}

TEST_CASE("topological_order on a cycle throws NotADAG with a witness") {
  const SupportDigraph g = graph(3, {{1, 2}, {2, 3}, {3, 2}});
  try {
    (void)topological_order(g);
    FAIL("expected NotADAG");
  } catch (const NotADAG& e) {
    CHECK(e.code() == ErrorCode::NotADAG);
    CHECK(e.witness().vertices == std::vector<Vertex>{1, 2});
    CHECK(e.witness().witnesses(g));
  }
  CHECK_THROWS_AS(topological_order(graph(1, {{1, 1}})), NotADAG);
}

TEST_CASE("longest_path_length") {
  CHECK(longest_path_length(graph(3, {})) == 0);
  CHECK(longest_path_length(graph(3, {{2, 3}, {3, 1}})) == 2);
  CHECK(longest_path_length(graph(3, {{2, 1}, {3, 1}})) == 1);
  CHECK_THROWS_AS(longest_path_length(graph(2, {{1, 2}, {2, 1}})), NotADAG);
}

TEST_CASE("reachability") {
  CHECK(one_based(reachability(graph(3, {{1, 2}, {2, 3}})).pairs()) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(reachability(graph(3, {})).size() == 0);
  CHECK(one_based(reachability(graph(1, {{1, 1}})).pairs()) == std::vector<Edge>{{1, 1}});
  // Two components feeding each other one way.
  CHECK(one_based(reachability(graph(4, {{1, 2}, {2, 1}, {2, 3}, {4, 4}})).pairs()) ==
        std::vector<Edge>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {4, 4}});
}

TEST_CASE("reachability matches walk enumeration") {
  selfcheck::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SupportDigraph g = support(selfcheck::random_matrix(rng, selfcheck::random_size(rng, 1, 5), 0.3));
    CHECK(reachability(g) == selfcheck::walk_reachability(g));
  }
}

TEST_CASE("reachability scales to ten thousand vertices") {
  const std::size_t n = 10000;
  std::vector<Edge> edges;
  selfcheck::Rng rng(5);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t e = 0; e < 4 * n; ++e) edges.emplace_back(pick(rng), pick(rng));
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  const Relation r = reachability(SupportDigraph(n, edges));
  CHECK(r.contains(0, n - 1));
  CHECK(r.order() == n);
}

TEST_CASE("max_cycle_mean") {
  CHECK(max_cycle_mean(sparse(1, {{1, 1, 3}})) == ExtReal(3));
  CHECK(max_cycle_mean(sparse(3, {{1, 2, 5}, {1, 3, 1}, {2, 3, -2}})).is_eps());
  CHECK(max_cycle_mean(sparse(2, {{1, 2, 1}, {2, 1, 3}})) == ExtReal(2));
  // Magnitude projection: ghost part counts.
  CHECK(max_cycle_mean(sparse(1, {{1, 1, SuperScalar(-1, 4)}})) == ExtReal(4));
  // The better of two disjoint cycles, and a non-integral mean.
  CHECK(max_cycle_mean(sparse(5, {{1, 2, 1}, {2, 1, 0}, {3, 4, 2}, {4, 5, 0}, {5, 3, 0}})) == ExtReal(2.0 / 3.0));
}

TEST_CASE("max_cycle_mean matches cycle enumeration") {
  selfcheck::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const SuperMatrix a = selfcheck::random_matrix(rng, selfcheck::random_size(rng, 1, 5), 0.35);
    CHECK(max_cycle_mean(a) == selfcheck::enumerated_max_cycle_mean(magnitude(a)));
  }
}
