#include <doctest.h>

#include <random>

#include "bcx/errors.hpp"
#include "bcx/family.hpp"
#include "bcx/graph.hpp"
#include "bcx/graph_io.hpp"
#include "oracles.hpp"

using namespace bcx;
using oracle::make;

namespace {

const Graph a3 = oracle::path(3);

}  // namespace

TEST_CASE("edge deletion") {
  CHECK(delete_edge(a3, {1, 2}) == make({1, 2, 3}, {{2, 3}}));
  CHECK(delete_edge(oracle::path(2), {1, 2}) == make({1, 2}, {}));
  CHECK(delete_edge(oracle::complete(3), {1, 2}) == make({1, 2, 3}, {{1, 3}, {2, 3}}));
  CHECK_THROWS_AS(delete_edge(a3, {1, 3}), InvalidEdge);
}

TEST_CASE("simple contraction keeps the smaller label") {
  CHECK(contract_edge_simple(oracle::complete(3), {1, 2}) == make({1, 3}, {{1, 3}}));
  CHECK(contract_edge_simple(oracle::complete(3), {3, 2}) == make({1, 2}, {{1, 2}}));
  CHECK(contract_edge_simple(a3, {1, 2}) == make({1, 3}, {{1, 3}}));
  CHECK(contract_edge_simple(oracle::path(2), {1, 2}) == make({1}, {}));
  CHECK_THROWS_AS(contract_edge_simple(a3, {1, 3}), InvalidEdge);
}

TEST_CASE("extraction") {
  CHECK(extract_edge(a3, {1, 2}) == make({3}, {}));
  CHECK(extract_edge(oracle::path(2), {1, 2}).empty());
  CHECK(extract_edge(oracle::complete(4), {2, 3}) == make({1, 4}, {{1, 4}}));
  CHECK_THROWS_AS(extract_edge(a3, {2, 2}), InvalidEdge);
}

TEST_CASE("vertex deletion") {
  CHECK(delete_vertex(oracle::complete(3), 3) == oracle::path(2));
  CHECK(delete_vertex(make({1}, {}), 1).empty());
  CHECK(delete_vertex(family_graph({Family::Star, 4}), 1) == make({2, 3, 4}, {}));
  CHECK_THROWS_AS(delete_vertex(a3, 9), UnknownVertex);
}

TEST_CASE("components") {
  const auto parts = components(make({1, 2, 3}, {{1, 2}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == oracle::path(2));
  CHECK(parts[1] == make({3}, {}));
  CHECK(components(oracle::complete(3)).size() == 1);
  CHECK(components(make({1, 2, 3}, {})).size() == 3);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(make({1, 1}, {}), InvalidInput);
  CHECK_THROWS_AS(make({1, 2}, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(make({1, 2}, {{1, 3}}), UnknownVertex);
  CHECK(make({2, 1}, {{1, 2}, {2, 1}}).edge_count() == 1);
}

TEST_CASE("edge operation invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 6, 0.5, rng);
    for (auto [s, t] : g.edges()) {
      const EdgeRef e{s, t};
      CHECK(delete_edge(g, e).with_edge(s, t) == g);
      const Graph f = contract_edge_simple(g, e);
      CHECK(f.size() == g.size() - 1);
      for (auto [u, v] : f.edges()) CHECK(u != v);
      CHECK(extract_edge(g, e) == delete_vertex(delete_vertex(g, s), t));
    }
  }
}

TEST_CASE("canonical keys") {
  CHECK(canonical_key(make({1, 2, 3}, {{1, 2}, {2, 3}})) == canonical_key(make({5, 7, 9}, {{7, 5}, {5, 9}})));
  CHECK(canonical_key(oracle::complete(3)) != canonical_key(oracle::path(3)));
  CHECK(canonical_key(make({1, 2}, {})) != canonical_key(oracle::path(2)));
  CHECK_THROWS_AS(canonical_key(oracle::path(11)), BudgetExceeded);
}

TEST_CASE("canonical keys are invariant under relabeling") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 7, 0.4, rng);
    const Graph h = oracle::shuffled(g, {3, 8, 11, 20, 21, 40, 41}, rng);
    CHECK(canonical_key(g) == canonical_key(h));
  }
}

TEST_CASE("canonical keys separate exactly the isomorphism classes on 4 vertices") {
  const auto graphs = oracle::all_labeled_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      CHECK((canonical_key(graphs[i]) == canonical_key(graphs[j])) ==
            oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST_CASE("isomorphism class counts") {
  for (unsigned n = 1; n <= 5; ++n) {
    std::vector<Graph> reps;
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      bool fresh = true;
      for (const Graph& r : reps) {
        if (oracle::isomorphic(g, r)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(g);
    }
    CHECK(isomorphism_classes(n).size() == reps.size());
  }
  CHECK(isomorphism_classes(6).size() == 156);
}

TEST_CASE("family graphs") {
  CHECK(family_graph({Family::A, 4}) == oracle::path(4));
  const Graph d4 = family_graph({Family::D, 4});
  CHECK(d4.edge_count() == 3);
  CHECK(d4.degree(2) == 3);
  const Graph c4 = family_graph({Family::AffineA, 3});
  CHECK(c4.size() == 4);
  CHECK(c4.edge_count() == 4);
  for (Vertex v : c4.vertices()) CHECK(c4.degree(v) == 2);
  CHECK(family_graph({Family::AffineA, 1}) == oracle::path(2));
  for (unsigned n = 2; n <= 8; ++n) {
    CHECK(oracle::isomorphic(family_graph({Family::A, n}), family_graph({Family::B, n})));
  }
  CHECK(family_graph({Family::AffineB, 4}).size() == 5);
  CHECK(family_graph({Family::AffineC, 4}).size() == 5);
  CHECK(family_graph({Family::AffineD, 5}).size() == 6);
  CHECK(family_graph({Family::AffineE, 6}).size() == 7);
  CHECK(family_graph({Family::AffineE, 7}).size() == 8);
  CHECK(family_graph({Family::AffineE, 8}).size() == 9);
  for (Family f : {Family::AffineB, Family::AffineD, Family::AffineE, Family::E, Family::D}) {
    const unsigned n = f == Family::AffineE || f == Family::E ? 6 : 5;
    CHECK(family_graph({f, n}).is_tree());
  }
}

TEST_CASE("family specs") {
  CHECK(parse_family("A:5") == FamilySpec{Family::A, 5});
  CHECK(parse_family("affineD:6") == FamilySpec{Family::AffineD, 6});
  CHECK(parse_family("k:4") == FamilySpec{Family::Complete, 4});
  CHECK(parse_family("F4") == FamilySpec{Family::F4, 4});
  CHECK_THROWS_AS(parse_family("E:5"), InvalidInput);
  CHECK_THROWS_AS(parse_family("Q:3"), ParseError);
  CHECK_THROWS_AS(parse_family("A:x"), ParseError);
}

TEST_CASE("edge list text") {
  const Graph g = parse_edge_list("# triangle plus a point\n0 1\n1 2\n\n2 0\n7\n");
  CHECK(g == make({0, 1, 2, 7}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), ParseError);
}
