#include <doctest.h>

#include <stdexcept>

#include "specgap/codec.hpp"
#include "specgap/graph.hpp"
#include "specgap/spectral.hpp"
#include "test_util.hpp"

using namespace specgap;

namespace {

LoopedGraph from_edges(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops) {
  return LoopedGraph::build(n, edges, loops);
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("published graph6 vector: 5 vertices, edges 02 04 13 34") {
  const LoopedGraph g = graph6_decode("DQc");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.at(0, 2) == 1);
  CHECK(g.at(0, 4) == 1);
  CHECK(g.at(1, 3) == 1);
  CHECK(g.at(3, 4) == 1);
  CHECK(graph6_encode(g) == "DQc");
  CHECK(graph6_decode(">>graph6<<DQc") == g);
}

TEST_CASE("published sparse6 vector: 7 vertices, edges 01 02 12 56") {
  const LoopedGraph g = sparse6_decode(":Fa@x^");
  CHECK(g.order() == 7);
  CHECK(g.loop_count() == 0);
  CHECK(g.edge_count() == 4);
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(0, 2) == 1);
  CHECK(g.at(1, 2) == 1);
  CHECK(g.at(5, 6) == 1);
  CHECK(sparse6_encode(g) == ":Fa@x^");
  CHECK(sparse6_decode(">>sparse6<<:Fa@x^") == g);
}

TEST_CASE("tiny sparse6 forms") {
  CHECK(sparse6_decode(":@") == LoopedGraph::build(1, {}, {}));
  CHECK(sparse6_encode(LoopedGraph::build(1, {}, {})) == ":@");

  const int loop0[] = {0};
  const LoopedGraph k1l = LoopedGraph::build(1, {}, loop0);
  CHECK(sparse6_encode(k1l) == ":@N");
  CHECK(sparse6_decode(":@N") == k1l);

  const std::pair<int, int> k2e[] = {{0, 1}};
  CHECK(sparse6_encode(LoopedGraph::build(2, k2e, {})) == ":An");
  const int both[] = {0, 1};
  CHECK(sparse6_encode(LoopedGraph::build(2, k2e, both)) == ":AH");
  CHECK(sparse6_decode(":AH").loop_count() == 2);
}

TEST_CASE("padding regimes at power-of-two orders") {
  // Loop at 0 on two vertices: padding must not spell a loop on vertex 1.
  const int loop0[] = {0};
  const LoopedGraph g2 = LoopedGraph::build(2, {}, loop0);
  CHECK(sparse6_encode(g2) == ":AF");
  CHECK(sparse6_decode(":AF") == g2);

  // Jump straight to the last vertices of n = 4, 8, 16.
  const std::pair<int, int> e4[] = {{0, 2}, {1, 2}};
  CHECK(sparse6_encode(from_edges(4, {e4, e4 + 2}, {})) == ":CoJ");
  const std::pair<int, int> e8[] = {{5, 6}};
  CHECK(sparse6_encode(from_edges(8, {e8, e8 + 1}, {})) == ":GxV");
  const std::pair<int, int> e16[] = {{13, 14}};
  CHECK(sparse6_encode(from_edges(16, {e16, e16 + 1}, {})) == ":O{v");

  // Both padding variants decode to the same graph away from the ambiguous
  // corner...
  CHECK(sparse6_decode(":GkN") == sparse6_decode(":GkF"));
  // ...while at the corner the all-ones padding legitimately reads as a loop
  // on the last vertex, which is exactly why the encoder avoids emitting it.
  const LoopedGraph corner = sparse6_decode(":Gx^");
  CHECK(corner.edge_count() == 1);
  CHECK(corner.has_loop(7));
}

TEST_CASE("closed path round trip keeps both loops") {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  const LoopedGraph p4s = LoopedGraph::build(4, edges, loops);
  CHECK(sparse6_encode(p4s) == ":CCtV");
  CHECK(sparse6_decode(sparse6_encode(p4s)) == p4s);
}

TEST_CASE("long-form order prefix") {
  const LoopedGraph g63 = LoopedGraph::build(63, {}, {});
  const std::string s = sparse6_encode(g63);
  CHECK(s.substr(0, 5) == ":~???");  // 126 then 63 in three 6-bit groups
  CHECK(sparse6_decode(s) == g63);

  std::vector<std::pair<int, int>> edges = {{0, 99}, {98, 99}};
  const int loops[] = {99};
  const LoopedGraph g100 = LoopedGraph::build(100, edges, loops);
  CHECK(sparse6_decode(sparse6_encode(g100)) == g100);
  CHECK(graph6_decode(graph6_encode(LoopedGraph::build(100, edges, {}))) ==
        LoopedGraph::build(100, edges, {}));
}

TEST_CASE("exhaustive round trip over all 4-vertex looped graphs") {
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    const LoopedGraph g = testutil::graph_from_mask(4, mask);
    CHECK(sparse6_decode(sparse6_encode(g)) == g);
  }
}

TEST_CASE("exhaustive graph6 round trip over simple graphs up to 5 vertices") {
  for (int n = 1; n <= 4; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
      int b = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
          if ((mask >> b) & 1u)
            adj[static_cast<std::size_t>(i) * n + j] = adj[static_cast<std::size_t>(j) * n + i] = 1;
      const LoopedGraph g = LoopedGraph::from_matrix(n, std::move(adj));
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
  int count5 = 0;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::uint8_t> adj(25, 0);
    int b = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++b)
        if ((mask >> b) & 1u) adj[i * 5 + j] = adj[j * 5 + i] = 1;
    const LoopedGraph g = LoopedGraph::from_matrix(5, std::move(adj));
    if (graph6_decode(graph6_encode(g)) == g) ++count5;
  }
  CHECK(count5 == 1024);
}

TEST_CASE("randomized sparse6 round trip, loops included") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const LoopedGraph g = testutil::random_looped_graph(rng, n);
    CHECK(sparse6_decode(sparse6_encode(g)) == g);
  }
}

TEST_CASE("decoder rejects malformed input") {
  CHECK_THROWS_AS((void)sparse6_decode("Fa@x^"), std::invalid_argument);   // missing colon
  CHECK_THROWS_AS((void)sparse6_decode(":F a@"), std::invalid_argument);   // byte < 63
  CHECK_THROWS_AS((void)sparse6_decode(":"), std::invalid_argument);       // no size
  CHECK_THROWS_AS((void)sparse6_decode(":~?"), std::invalid_argument);     // cut size prefix
  CHECK_THROWS_AS((void)sparse6_decode(":B_"), std::invalid_argument);     // repeated edge
  CHECK_THROWS_AS((void)sparse6_decode(":AAA"), std::invalid_argument);    // junk after data
  CHECK_THROWS_AS((void)graph6_decode("D"), std::invalid_argument);        // payload too short
  CHECK_THROWS_AS((void)graph6_decode("DQcQ"), std::invalid_argument);     // payload too long
  CHECK_THROWS_AS((void)graph6_decode(":Fa@x^"), std::invalid_argument);   // wrong format
}

TEST_CASE("graph6 refuses loops") {
  const int loop0[] = {0};
  CHECK_THROWS_AS((void)graph6_encode(LoopedGraph::build(3, {}, loop0)), std::invalid_argument);
}

TEST_CASE("decode_any dispatches on the marker") {
  CHECK(decode_any(":Fa@x^") == sparse6_decode(":Fa@x^"));
  CHECK(decode_any("DQc") == graph6_decode("DQc"));
  CHECK(decode_any(">>sparse6<<:Fa@x^\n") == sparse6_decode(":Fa@x^"));
}

TEST_CASE("search-certificate registry resolves every cell") {
  const auto& reg = table3_registry();
  CHECK(reg.entries().size() == 10);

  const struct { const char* name; int n, i, j; } expected[] = {
      {"G1", 12, 2, 2}, {"G2", 15, 2, 3}, {"G3", 16, 2, 4}, {"G4", 7, 3, 2},
      {"G6", 12, 3, 4}, {"G7", 11, 4, 4}, {"G1c", 12, 3, 1}, {"G2c", 15, 4, 1},
  };
  for (const auto& e : expected) {
    const auto* entry = reg.find(e.name);
    REQUIRE(entry != nullptr);
    CHECK(entry->available);
    CHECK(entry->i == e.i);
    CHECK(entry->j == e.j);
    const auto g = reg.graph(e.name);
    REQUIRE(g.has_value());
    CHECK(g->order() == e.n);
  }

  const auto* g5 = reg.find("G5");
  REQUIRE(g5 != nullptr);
  CHECK_FALSE(g5->available);
  CHECK_FALSE(reg.graph("G5").has_value());
  const auto* g5c = reg.find("G5c");
  REQUIRE(g5c != nullptr);
  CHECK_FALSE(g5c->available);
  CHECK(reg.for_cell(3, 3) == g5);
  CHECK(reg.find("nope") == nullptr);

  // Complements really are complements.
  const auto g1 = reg.graph("G1");
  const auto g1c = reg.graph("G1c");
  REQUIRE((g1 && g1c));
  CHECK(closed_complement(*g1) == *g1c);
}

TEST_CASE("the 7-vertex search certificate is 3-regular with gap 2sqrt2") {
  const auto g = table3_registry().graph("G4");
  REQUIRE(g.has_value());
  const auto prof = degree_profile(*g);
  for (int d : prof.degrees) CHECK(d == 3);
  CHECK(spread(*g, {3, 2}) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
}

}  // TEST_SUITE
