#include <doctest.h>

#include <random>

#include "bcx/errors.hpp"
#include "bcx/graph.hpp"
#include "bcx/word.hpp"
#include "oracles.hpp"

using namespace bcx;

namespace {

const Graph a2 = oracle::path(2);
const Graph a3 = oracle::path(3);

Word w(const BooleanElement& el) { return el.word(); }

}  // namespace

TEST_CASE("normal forms") {
  CHECK(w(normalize({3, 1}, a3)) == Word{1, 3});
  CHECK(w(normalize({2, 1}, a2)) == Word{2, 1});
  CHECK(w(normalize({3, 1, 2}, a3)) == Word{1, 3, 2});
  CHECK(oracle::class_minimum({3, 1, 2}, a3) == Word{1, 3, 2});
  CHECK(normalize({}, a3).rank() == -1);
  CHECK_THROWS_AS(normalize({1, 1}, a3), InvalidInput);
  CHECK_THROWS_AS(normalize({1, 4}, a3), UnknownVertex);
}

TEST_CASE("normalize picks the class minimum and is constant on the class") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = 2 + trial % 7;
    const Graph g = oracle::random_graph(n, 0.45, rng);
    Word word(g.vertices().begin(), g.vertices().end());
    std::shuffle(word.begin(), word.end(), rng);
    word.resize(1 + rng() % n);
    const auto cls = oracle::commutation_class(word, g);
    const BooleanElement el = normalize(word, g);
    CHECK(el.word() == *cls.begin());
    CHECK(normalize(el.word(), g) == el);
    for (const Word& rep : cls) CHECK(normalize(rep, g) == el);
  }
}

TEST_CASE("trace order") {
  const TraceOrder o13(normalize({1, 3}, a3), a3);
  CHECK_FALSE(o13.precedes(1, 3));
  CHECK_FALSE(o13.precedes(3, 1));
  const TraceOrder o12(normalize({1, 2}, a2), a2);
  CHECK(o12.precedes(1, 2));
  CHECK_FALSE(o12.precedes(2, 1));
  const TraceOrder o132(normalize({1, 3, 2}, a3), a3);
  CHECK(o132.precedes(1, 2));
  CHECK(o132.precedes(3, 2));
  CHECK_FALSE(o132.precedes(1, 3));
  CHECK_FALSE(o132.precedes(3, 1));
  CHECK(o132.is_maximal(2));
  CHECK_FALSE(o132.is_maximal(1));
}

TEST_CASE("trace order agrees with every representative") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 2 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    Word word(g.vertices().begin(), g.vertices().end());
    std::shuffle(word.begin(), word.end(), rng);
    const BooleanElement el = normalize(word, g);
    const TraceOrder order(el, g);
    const auto cls = oracle::commutation_class(word, g);
    for (Vertex a : word) {
      for (Vertex b : word) {
        if (a == b) continue;
        bool always = true;
        for (const Word& rep : cls) {
          const auto pa = std::find(rep.begin(), rep.end(), a);
          const auto pb = std::find(rep.begin(), rep.end(), b);
          always = always && pa < pb;
        }
        CHECK(order.precedes(a, b) == always);
      }
    }
  }
}

TEST_CASE("membership in B(G)_e") {
  CHECK(in_b_e(normalize({1, 2}, a2), {1, 2}, a2));
  CHECK_FALSE(in_b_e(normalize({2, 1}, a2), {1, 2}, a2));
  CHECK(in_b_e(normalize({1, 3, 2}, a3), {1, 2}, a3));
  CHECK_FALSE(in_b_e(normalize({1, 3}, a3), {1, 2}, a3));
  CHECK_THROWS_AS(in_b_e(normalize({1, 3}, a3), {1, 3}, a3), InvalidEdge);
}

TEST_CASE("membership in B(G)_e matches representative search on all graphs up to 6 vertices") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      if (g.edge_count() == 0) continue;
      for (const auto& rank : oracle::all_classes(g)) {
        for (const Word& word : rank) {
          const BooleanElement el = normalize(word, g);
          const auto cls = oracle::commutation_class(word, g);
          for (auto [u, v] : g.edges()) {
            for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
              bool adjacent = false;
              for (const Word& rep : cls) {
                for (std::size_t i = 0; i + 1 < rep.size(); ++i) adjacent |= rep[i] == s && rep[i + 1] == t;
              }
              CHECK(in_b_e(el, {s, t}, g) == adjacent);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("faces do not depend on the representative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 2 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    Word word(g.vertices().begin(), g.vertices().end());
    std::shuffle(word.begin(), word.end(), rng);
    const BooleanElement el = normalize(word, g);
    for (Vertex v : word) {
      const BooleanElement face = delete_letter(el, v, g);
      for (const Word& rep : oracle::commutation_class(word, g)) {
        Word cut = rep;
        cut.erase(std::find(cut.begin(), cut.end(), v));
        CHECK(normalize(cut, g) == face);
      }
      CHECK(is_cover(face, el, g));
    }
  }
}

TEST_CASE("word serialization") {
  CHECK(format_element(normalize({3, 1, 2}, a3), a3) == "132");
  const Graph big = oracle::make({3, 7, 12}, {{3, 12}, {12, 7}});
  CHECK(uses_hyphens(big));
  const BooleanElement el = normalize({3, 12, 7}, big);
  CHECK(format_element(el, big) == "3-12-7");
  CHECK(parse_element("3-12-7", big) == el);
  CHECK(parse_element("132", a3) == normalize({1, 3, 2}, a3));
  CHECK_THROWS_AS(parse_word("1a", false), ParseError);
  CHECK_THROWS_AS(parse_word("3--7", true), ParseError);
}
