#include <catch2/catch_amalgamated.hpp>

#include "phylotri/oracle.hpp"
#include "phylotri/pmc.hpp"
#include "testutil.hpp"

using namespace phylotri;

namespace {
std::vector<VertexSet> as_sets(const std::vector<Bitset>& bs) {
  std::vector<VertexSet> out;
  for (const Bitset& b : bs) out.push_back(b.to_vertex_set());
  return out;
}
}  // namespace

TEST_CASE("potential maximal clique predicate") {
  Graph c4 = testutil::cycle_graph(4);
  // Any three vertices of a four-cycle form one; the missing corner's
  // neighborhood covers the non-adjacent pair.
  CHECK(is_pmc(c4, Bitset::of(4, {0, 1, 2})));
  CHECK(is_pmc(c4, Bitset::of(4, {0, 2, 3})));
  // A separator is never one (its components are full).
  CHECK(!is_pmc(c4, Bitset::of(4, {0, 2})));
  // An edge leaves the opposite edge's vertices seeing only half of it.
  CHECK(!is_pmc(c4, Bitset::of(4, {0, 1})));
  CHECK(!is_pmc(c4, Bitset::full(4)));
  CHECK(!is_pmc(c4, Bitset(4)));

  Graph k4 = testutil::complete_graph(4);
  CHECK(is_pmc(k4, Bitset::full(4)));
  CHECK(!is_pmc(k4, Bitset::of(4, {0, 1, 2})));

  // Single vertices of an edgeless graph.
  Graph e2(2);
  CHECK(is_pmc(e2, Bitset::of(2, {0})));
  CHECK(!is_pmc(e2, Bitset::full(2)));
}

TEST_CASE("pmc predicate matches its definition") {
  std::mt19937_64 rng(202);
  OracleCaps caps;
  for (int trial = 0; trial < 50; trial++) {
    int n = 4 + (int)(rng() % 4);
    Graph g = testutil::random_graph(rng, n, 150 + (int)(rng() % 600));
    for (uint64_t mask = 1; mask < (uint64_t(1) << n); mask++) {
      Bitset k(n);
      for (int v = 0; v < n; v++)
        if ((mask >> v) & 1) k.set(v);
      CHECK(is_pmc(g, k) == brute_is_pmc(g, k, caps));
    }
  }
}

TEST_CASE("pmc enumeration on known graphs") {
  Graph c4 = testutil::cycle_graph(4);
  auto pmcs = enumerate_pmcs(c4, enumerate_minimal_separators(c4));
  CHECK(as_sets(pmcs) ==
        std::vector<VertexSet>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

  Graph k5 = testutil::complete_graph(5);
  CHECK(as_sets(enumerate_pmcs(k5, {})) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});

  Graph p4 = testutil::path_graph(4);
  auto path_pmcs = enumerate_pmcs(p4, enumerate_minimal_separators(p4));
  CHECK(as_sets(path_pmcs) == std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}});

  Graph e3(3);
  CHECK(as_sets(enumerate_pmcs(e3, {})) == std::vector<VertexSet>{{0}, {1}, {2}});
}

TEST_CASE("pmc enumeration agrees with the exhaustive filter") {
  std::mt19937_64 rng(303);
  OracleCaps caps;
  for (int trial = 0; trial < 60; trial++) {
    int n = 4 + (int)(rng() % 5);
    Graph g = testutil::random_graph(rng, n, 100 + (int)(rng() % 700));
    auto fast = enumerate_pmcs(g, enumerate_minimal_separators(g));
    auto brute = brute_pmcs(g, caps);
    CHECK(as_sets(fast) == as_sets(brute));
  }
}

TEST_CASE("blocks associated with a pmc") {
  Graph c4 = testutil::cycle_graph(4);
  auto blocks = blocks_associated(c4, Bitset::of(4, {0, 1, 2}));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].sep.to_vertex_set() == VertexSet{0, 2});
  CHECK(blocks[0].comp.to_vertex_set() == VertexSet{3});
}
