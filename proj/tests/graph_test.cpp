#include <doctest.h>

#include <set>
#include <stdexcept>

#include "specgap/graph.hpp"
#include "test_util.hpp"

using namespace specgap;

TEST_SUITE("graph") {

TEST_CASE("build produces the closed path adjacency") {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  const LoopedGraph g = LoopedGraph::build(4, edges, loops);
  const std::uint8_t want[16] = {1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0};
  for (int t = 0; t < 16; ++t) CHECK(g.matrix()[t] == want[t]);
  CHECK(g.edge_count() == 3);
  CHECK(g.loop_count() == 2);
}

TEST_CASE("build edge cases and errors") {
  const LoopedGraph single = LoopedGraph::build(1, {}, {});
  CHECK(single.order() == 1);
  CHECK(single.matrix()[0] == 0);

  const std::pair<int, int> k3[] = {{0, 1}, {0, 2}, {1, 2}};
  const LoopedGraph g = LoopedGraph::build(3, k3, {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g.at(i, j) == (i != j ? 1 : 0));

  const std::pair<int, int> oob[] = {{0, 3}};
  CHECK_THROWS_AS((void)LoopedGraph::build(3, oob, {}), std::invalid_argument);
  const std::pair<int, int> dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS((void)LoopedGraph::build(3, dup, {}), std::invalid_argument);
  const std::pair<int, int> self[] = {{1, 1}};
  CHECK_THROWS_AS((void)LoopedGraph::build(3, self, {}), std::invalid_argument);
  const int badloop[] = {5};
  CHECK_THROWS_AS((void)LoopedGraph::build(3, {}, badloop), std::invalid_argument);
}

TEST_CASE("from_matrix validates symmetry and 0/1 entries") {
  CHECK_THROWS_AS((void)LoopedGraph::from_matrix(2, {0, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)LoopedGraph::from_matrix(2, {0, 2, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)LoopedGraph::from_matrix(2, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("underlying_simple zeroes the diagonal and is idempotent") {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  const LoopedGraph p4s = LoopedGraph::build(4, edges, loops);
  const LoopedGraph p4 = underlying_simple(p4s);
  CHECK(p4.loop_count() == 0);
  CHECK(p4.edge_count() == 3);
  CHECK(underlying_simple(p4) == p4);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    const auto g = testutil::random_looped_graph(rng, 1 + static_cast<int>(rng() % 10));
    const auto s = underlying_simple(g);
    CHECK(s.loop_count() == 0);
    CHECK(s.edge_count() == g.edge_count());
    CHECK(underlying_simple(s) == s);
  }
}

TEST_CASE("blowup expands entries into constant blocks") {
  const std::pair<int, int> e[] = {{0, 1}};
  const LoopedGraph k2 = LoopedGraph::build(2, e, {});
  CHECK(blowup(k2, 1) == k2);
  CHECK_THROWS_AS((void)blowup(k2, 0), std::invalid_argument);

  // K2 blown up by 3 is complete bipartite 3+3.
  const LoopedGraph b = blowup(k2, 3);
  CHECK(b.order() == 6);
  CHECK(b.edge_count() == 9);
  CHECK(b.loop_count() == 0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(b.at(i, j) == ((i / 3) != (j / 3) ? 1 : 0));

  // A looped vertex becomes a complete-with-loops block.
  const int loop0[] = {0};
  const LoopedGraph k1l = LoopedGraph::build(1, {}, loop0);
  const LoopedGraph bl = blowup(k1l, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(bl.at(i, j) == 1);
}

TEST_CASE("closed_complement is an involution that flips everything") {
  const LoopedGraph empty3 = LoopedGraph::build(3, {}, {});
  const LoopedGraph full3 = closed_complement(empty3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(full3.at(i, j) == 1);

  std::mt19937_64 rng(12);
  for (int it = 0; it < 50; ++it) {
    const auto g = testutil::random_looped_graph(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(closed_complement(closed_complement(g)) == g);
  }
}

TEST_CASE("disjoint_union is block diagonal") {
  const LoopedGraph k1 = LoopedGraph::build(1, {}, {});
  const LoopedGraph u = disjoint_union(k1, k1);
  CHECK(u.order() == 2);
  CHECK(u.edge_count() == 0);
  CHECK(u.loop_count() == 0);

  const std::pair<int, int> e[] = {{0, 1}};
  const int l0[] = {0};
  const LoopedGraph a = LoopedGraph::build(2, e, l0);
  const LoopedGraph b = LoopedGraph::build(2, e, {});
  const LoopedGraph ab = disjoint_union(a, b);
  CHECK(ab.order() == 4);
  CHECK(ab.at(0, 0) == 1);
  CHECK(ab.at(0, 1) == 1);
  CHECK(ab.at(2, 3) == 1);
  CHECK(ab.at(1, 2) == 0);
  CHECK(ab.at(0, 3) == 0);
}

TEST_CASE("degree_profile counts the loop once") {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  const auto p = degree_profile(LoopedGraph::build(4, edges, loops));
  CHECK(p.degrees == std::vector<int>{2, 2, 2, 2});
  CHECK(p.average == doctest::Approx(2.0));

  const auto empty = degree_profile(LoopedGraph::build(5, {}, {}));
  CHECK(empty.degrees == std::vector<int>(5, 0));
  CHECK(empty.average == doctest::Approx(0.0));

  std::vector<std::pair<int, int>> kedges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) kedges.emplace_back(i, j);
  const auto kn = degree_profile(LoopedGraph::build(6, kedges, {}));
  for (int d : kn.degrees) CHECK(d == 5);
}

TEST_CASE("trace of A^2 equals the degree sum") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto g = testutil::random_looped_graph(rng, n);
    long long tr2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tr2 += g.at(i, j) * g.at(j, i);
    long long dsum = 0;
    for (int d : degree_profile(g).degrees) dsum += d;
    CHECK(tr2 == dsum);
  }
}

TEST_CASE("canonical_form is invariant under relabelling") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 60; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = testutil::random_looped_graph(rng, n);
    const auto perm = testutil::random_permutation(rng, n);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
}

TEST_CASE("canonical_form separates the closed path from the open path") {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  const LoopedGraph p4s = LoopedGraph::build(4, edges, loops);
  CHECK(canonical_form(p4s) != canonical_form(underlying_simple(p4s)));
  CHECK(isomorphic(p4s, p4s));
  CHECK_FALSE(isomorphic(p4s, underlying_simple(p4s)));
}

TEST_CASE("canonical_form counts isomorphism classes of small spaces") {
  // Class counts established independently by orbit counting over the
  // permutation action on cell bits: 20 looped graphs on 3 vertices,
  // 90 on 4 vertices, 11 simple graphs on 4 vertices.
  std::set<std::string> l3;
  for (std::uint64_t m = 0; m < (1u << 6); ++m)
    l3.insert(canonical_form(testutil::graph_from_mask(3, m)));
  CHECK(l3.size() == 20);

  std::set<std::string> l4;
  for (std::uint64_t m = 0; m < (1u << 10); ++m)
    l4.insert(canonical_form(testutil::graph_from_mask(4, m)));
  CHECK(l4.size() == 90);

  std::set<std::string> s4;
  for (std::uint64_t m = 0; m < (1u << 10); ++m) {
    const auto g = testutil::graph_from_mask(4, m);
    if (g.loop_count() == 0) s4.insert(canonical_form(g));
  }
  CHECK(s4.size() == 11);
}

TEST_CASE("canonical_form rejects orders past the brute-force cap") {
  CHECK_THROWS_AS((void)canonical_form(LoopedGraph::build(13, {}, {})), std::invalid_argument);
  // Highly symmetric graphs at the cap stay fast thanks to twin skipping.
  CHECK(canonical_form(LoopedGraph::build(12, {}, {})).size() == 144);
  CHECK(canonical_form(closed_complement(LoopedGraph::build(12, {}, {}))).size() == 144);
}

TEST_CASE("blowups compose up to isomorphism") {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 4; ++n)
    for (int s = 1; s <= 3; ++s)
      for (int t = 1; t <= 3; ++t) {
        if (n * s * t > kCanonicalMaxOrder) continue;
        const auto g = testutil::random_looped_graph(rng, n);
        CHECK(canonical_form(blowup(blowup(g, s), t)) == canonical_form(blowup(g, s * t)));
      }
}

TEST_CASE("operations preserve symmetry and 0/1 entries") {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 40; ++it) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = testutil::random_looped_graph(rng, n);
    for (const auto& h : {underlying_simple(g), blowup(g, 2), closed_complement(g),
                          disjoint_union(g, g)}) {
      for (int i = 0; i < h.order(); ++i)
        for (int j = 0; j < h.order(); ++j) {
          CHECK(h.at(i, j) == h.at(j, i));
          CHECK((h.at(i, j) == 0 || h.at(i, j) == 1));
        }
    }
  }
}

}  // TEST_SUITE
