#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "phylotri/graph.hpp"

namespace phylotri {

// S is a minimal separator iff G - S has at least two components whose
// neighborhood is all of S. The empty set never qualifies: no connected pair
// is split by removing nothing.
inline bool is_minimal_separator(const Graph& g, const Bitset& s) {
  if (s.empty()) return false;
  int full = 0;
  Bitset todo = Bitset::full(g.n());
  todo.subtract(s);
  for (int v = todo.first(); v != -1; v = todo.first()) {
    Bitset comp = g.component_of(v, s);
    todo.subtract(comp);
    if (g.neighborhood(comp) == s && ++full >= 2) return true;
  }
  return false;
}

// Berry-Bordat enumeration: seed with the component neighborhoods of
// G - N[v] for every v, then close under substituting one separator vertex's
// neighborhood. Every emitted set is re-checked for minimality.
inline std::vector<Bitset> enumerate_minimal_separators(const Graph& g) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> out;
  size_t head = 0;
  auto offer = [&](Bitset s) {
    if (s.empty() || seen.count(s)) return;
    seen.insert(s);
    if (!is_minimal_separator(g, s)) return;
    out.push_back(std::move(s));
  };
  for (int v = 0; v < g.n(); v++) {
    Bitset closed = g.nb(v);
    closed.set(v);
    for (const Bitset& comp : g.components(closed)) offer(g.neighborhood(comp));
  }
  while (head < out.size()) {
    Bitset s = out[head++];
    s.for_each([&](int x) {
      Bitset removed = s | g.nb(x);
      for (const Bitset& comp : g.components(removed)) offer(g.neighborhood(comp));
    });
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return a.lex_less(b);
  });
  return out;
}

// Block (S, C): C is a component of G - S. Full when N(C) = S. For a
// minimal separator S, the neighborhood of every component of G - S is again
// a minimal separator, so each component yields the full block (N(C), C).
struct FullBlock {
  Bitset sep;
  Bitset comp;
};

inline std::vector<FullBlock> full_blocks(const Graph& g, const Bitset& s) {
  std::vector<FullBlock> out;
  for (const Bitset& comp : g.components(s)) {
    Bitset nc = g.neighborhood(comp);
    if (nc == s) out.push_back({std::move(nc), comp});
  }
  return out;
}

// All full blocks over a separator family, deduplicated (the component
// determines its block) and sorted by |S union C| ascending, ties
// lexicographic. This is the processing order of the block dynamic program.
inline std::vector<FullBlock> all_full_blocks(const Graph& g, const std::vector<Bitset>& delta) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<FullBlock> out;
  for (const Bitset& s : delta)
    for (const Bitset& comp : g.components(s)) {
      Bitset nc = g.neighborhood(comp);
      if (nc != s) continue;
      if (seen.insert(comp).second) out.push_back({std::move(nc), comp});
    }
  std::sort(out.begin(), out.end(), [](const FullBlock& a, const FullBlock& b) {
    Bitset ua = a.sep | a.comp, ub = b.sep | b.comp;
    int ca = ua.count(), cb = ub.count();
    if (ca != cb) return ca < cb;
    if (ua != ub) return ua.lex_less(ub);
    return a.comp.lex_less(b.comp);
  });
  return out;
}

// R(S, C): the subgraph induced by S union C with S completed into a clique,
// returned densely reindexed with the original ids alongside.
struct Realization {
  Graph graph;
  VertexSet ids;  // new id -> original id
};

inline Realization realization(const Graph& g, const FullBlock& b) {
  Realization r;
  Bitset keep = b.sep | b.comp;
  r.graph = g.induced(keep, &r.ids);
  VertexSet sep_new;
  for (size_t i = 0; i < r.ids.size(); i++)
    if (b.sep.get(r.ids[i])) sep_new.push_back((int)i);
  r.graph = r.graph.saturated({sep_new});
  return r;
}

// S and T are parallel when T meets at most one component of G - S (the
// count is zero when T is inside S). The relation is symmetric.
inline bool are_parallel(const Graph& g, const Bitset& s, const Bitset& t) {
  int hits = 0;
  Bitset todo = Bitset::full(g.n());
  todo.subtract(s);
  for (int v = todo.first(); v != -1; v = todo.first()) {
    Bitset comp = g.component_of(v, s);
    todo.subtract(comp);
    if (comp.intersects(t) && ++hits >= 2) return false;
  }
  return true;
}

inline bool pairwise_parallel(const Graph& g, const std::vector<Bitset>& sets) {
  for (size_t i = 0; i < sets.size(); i++)
    for (size_t j = i + 1; j < sets.size(); j++)
      if (!are_parallel(g, sets[i], sets[j])) return false;
  return true;
}

}  // namespace phylotri
