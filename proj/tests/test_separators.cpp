#include <catch2/catch_amalgamated.hpp>

#include "phylotri/oracle.hpp"
#include "phylotri/separators.hpp"
#include "testutil.hpp"

using namespace phylotri;

namespace {
std::vector<VertexSet> as_sets(const std::vector<Bitset>& bs) {
  std::vector<VertexSet> out;
  for (const Bitset& b : bs) out.push_back(b.to_vertex_set());
  return out;
}
}  // namespace

TEST_CASE("minimal separator predicate") {
  Graph p4 = testutil::path_graph(4);
  CHECK(is_minimal_separator(p4, Bitset::of(4, {1})));
  CHECK(is_minimal_separator(p4, Bitset::of(4, {2})));
  CHECK(!is_minimal_separator(p4, Bitset::of(4, {0})));
  CHECK(!is_minimal_separator(p4, Bitset::of(4, {1, 2})));  // neither side sees both
  CHECK(!is_minimal_separator(p4, Bitset(4)));

  Graph c4 = testutil::cycle_graph(4);
  CHECK(is_minimal_separator(c4, Bitset::of(4, {0, 2})));
  CHECK(is_minimal_separator(c4, Bitset::of(4, {1, 3})));
  CHECK(!is_minimal_separator(c4, Bitset::of(4, {0, 1})));
}

TEST_CASE("separator enumeration on known graphs") {
  CHECK(as_sets(enumerate_minimal_separators(testutil::path_graph(4))) ==
        std::vector<VertexSet>{{1}, {2}});
  CHECK(as_sets(enumerate_minimal_separators(testutil::cycle_graph(4))) ==
        std::vector<VertexSet>{{0, 2}, {1, 3}});
  CHECK(enumerate_minimal_separators(testutil::complete_graph(4)).empty());
  CHECK(enumerate_minimal_separators(Graph(3)).empty());

  // A five-cycle has one separator per non-adjacent pair.
  CHECK(enumerate_minimal_separators(testutil::cycle_graph(5)).size() == 5);

  // Disconnected: separators live inside their own component.
  Graph two(7);
  two.add_edge(0, 1);
  two.add_edge(1, 2);
  two.add_edge(3, 4);
  two.add_edge(4, 5);
  CHECK(as_sets(enumerate_minimal_separators(two)) == std::vector<VertexSet>{{1}, {4}});
}

TEST_CASE("separator enumeration agrees with the exhaustive filter") {
  std::mt19937_64 rng(101);
  OracleCaps caps;
  for (int trial = 0; trial < 60; trial++) {
    Graph g = testutil::random_graph(rng, 4 + (int)(rng() % 5), 150 + (int)(rng() % 600));
    CHECK(as_sets(enumerate_minimal_separators(g)) == as_sets(brute_minimal_separators(g, caps)));
  }
}

TEST_CASE("full blocks of a separator") {
  Graph c4 = testutil::cycle_graph(4);
  Bitset s = Bitset::of(4, {0, 2});
  auto blocks = full_blocks(c4, s);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].sep.to_vertex_set() == VertexSet{0, 2});
  CHECK(blocks[0].comp.to_vertex_set() == VertexSet{1});
  CHECK(blocks[1].comp.to_vertex_set() == VertexSet{3});

  // Components that do not see the whole separator are dropped: removing
  // {1,3} from a path leaves {0} (sees only 1) and {2} (sees both).
  Graph p4 = testutil::path_graph(4);
  auto pb = full_blocks(p4, Bitset::of(4, {1, 3}));
  REQUIRE(pb.size() == 1);
  CHECK(pb[0].comp.to_vertex_set() == VertexSet{2});
}

TEST_CASE("all full blocks are ordered by size") {
  Graph c4 = testutil::cycle_graph(4);
  auto delta = enumerate_minimal_separators(c4);
  auto blocks = all_full_blocks(c4, delta);
  REQUIRE(blocks.size() == 4);
  for (size_t i = 0; i + 1 < blocks.size(); i++) {
    int a = (blocks[i].sep | blocks[i].comp).count();
    int b = (blocks[i + 1].sep | blocks[i + 1].comp).count();
    CHECK(a <= b);
  }
}

TEST_CASE("realization saturates the separator") {
  Graph c5 = testutil::cycle_graph(5);
  Bitset s = Bitset::of(5, {0, 2});
  auto blocks = full_blocks(c5, s);
  REQUIRE(blocks.size() == 2);
  // The block {3,4} realization: vertices {0,2,3,4} with 0-2 saturated.
  Realization r = realization(c5, blocks[1]);
  CHECK(r.ids == VertexSet{0, 2, 3, 4});
  CHECK(r.graph.has_edge(0, 1));  // the saturated pair 0-2
  CHECK(r.graph.has_edge(1, 2));  // original 2-3
  CHECK(r.graph.m() == 4);
}

TEST_CASE("parallel separators") {
  Graph p5 = testutil::path_graph(5);
  CHECK(are_parallel(p5, Bitset::of(5, {1}), Bitset::of(5, {3})));
  CHECK(are_parallel(p5, Bitset::of(5, {1}), Bitset::of(5, {1})));

  Graph c4 = testutil::cycle_graph(4);
  CHECK(!are_parallel(c4, Bitset::of(4, {0, 2}), Bitset::of(4, {1, 3})));
  CHECK(pairwise_parallel(c4, {Bitset::of(4, {0, 2})}));
  CHECK(!pairwise_parallel(c4, {Bitset::of(4, {0, 2}), Bitset::of(4, {1, 3})}));

  Graph c6 = testutil::cycle_graph(6);
  // Opposite pairs on a six-cycle cross; near pairs are parallel.
  CHECK(!are_parallel(c6, Bitset::of(6, {0, 3}), Bitset::of(6, {1, 4})));
  CHECK(are_parallel(c6, Bitset::of(6, {0, 2}), Bitset::of(6, {0, 4})));
}
