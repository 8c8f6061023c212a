#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "phylotri/characters.hpp"
#include "phylotri/graph.hpp"
#include "phylotri/rational.hpp"
#include "phylotri/separators.hpp"

namespace phylotri {

// Exhaustive reference implementations for desk-scale instances. Everything
// here favors directness over speed and refuses inputs above its caps.
struct OracleCaps {
  int max_vertices = 10;
  int max_characters = 6;
};

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PMC_PHYLO_ORACLE_CAP=<k> raises (or lowers) both caps to k.
inline OracleCaps oracle_caps() {
  OracleCaps caps;
  if (const char* env = std::getenv("PMC_PHYLO_ORACLE_CAP")) {
    int k = std::atoi(env);
    if (k > 0) {
      caps.max_vertices = k;
      caps.max_characters = k;
    }
  }
  return caps;
}

inline void oracle_check_vertices(const Graph& g, const OracleCaps& caps) {
  if (g.n() > caps.max_vertices)
    throw OracleCapExceeded("oracle refuses " + std::to_string(g.n()) + " vertices (cap " +
                            std::to_string(caps.max_vertices) + ")");
}

inline std::vector<Bitset> brute_minimal_separators(const Graph& g, const OracleCaps& caps) {
  oracle_check_vertices(g, caps);
  std::vector<Bitset> out;
  const int n = g.n();
  for (uint64_t mask = 1; n > 0 && mask < (uint64_t(1) << n); mask++) {
    Bitset s(n);
    for (int v = 0; v < n; v++)
      if ((mask >> v) & 1) s.set(v);
    if (is_minimal_separator(g, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return a.lex_less(b);
  });
  return out;
}

namespace oracle_detail {

// is_pmc restated from scratch against the defining conditions, kept apart
// from the production predicate so the two can disagree in tests.
inline bool pmc_by_definition(const Graph& g, const Bitset& k) {
  if (k.empty()) return false;
  std::vector<Bitset> hoods;
  for (const Bitset& c : g.components(k)) hoods.push_back(g.neighborhood(c));
  for (const Bitset& h : hoods)
    if (h == k) return false;
  VertexSet vs = k.to_vertex_set();
  for (size_t i = 0; i < vs.size(); i++)
    for (size_t j = i + 1; j < vs.size(); j++) {
      if (g.has_edge(vs[i], vs[j])) continue;
      bool covered = false;
      for (const Bitset& h : hoods)
        if (h.get(vs[i]) && h.get(vs[j])) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

using FillMask = std::array<uint64_t, 2>;

struct FillMaskLess {
  bool operator()(const FillMask& a, const FillMask& b) const {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  }
};

inline bool mask_subset(const FillMask& a, const FillMask& b) {
  return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0;
}

// Some chordless cycle of length >= 4, preferring short ones; empty when
// chordal. Scans centers v with non-adjacent neighbors u, w and closes the
// cycle with a shortest u-w path avoiding the rest of N[v].
inline std::vector<int> find_chordless_cycle(const Graph& g) {
  std::vector<int> best;
  for (int v = 0; v < g.n(); v++) {
    VertexSet nbv = g.neighbors(v);
    for (size_t i = 0; i < nbv.size(); i++)
      for (size_t j = i + 1; j < nbv.size(); j++) {
        int u = nbv[i], w = nbv[j];
        if (g.has_edge(u, w)) continue;
        Bitset forbid = g.nb(v);
        forbid.set(v);
        forbid.reset(u);
        forbid.reset(w);
        // BFS from u to w in G - forbid.
        std::vector<int> prev(g.n(), -2);
        std::vector<int> queue = {u};
        prev[u] = -1;
        for (size_t h = 0; h < queue.size() && prev[w] == -2; h++) {
          int x = queue[h];
          g.nb(x).for_each([&](int y) {
            if (prev[y] == -2 && !forbid.get(y)) {
              prev[y] = x;
              queue.push_back(y);
            }
          });
        }
        if (prev[w] == -2) continue;
        std::vector<int> cyc = {v};
        for (int x = w; x != -1; x = prev[x]) cyc.push_back(x);
        std::reverse(cyc.begin() + 1, cyc.end());  // v, u, ..., w
        if (best.empty() || cyc.size() < best.size()) best = cyc;
        if (best.size() == 4) return best;
      }
  }
  return best;
}

inline void enumerate_triangulation_leaves(const std::map<std::pair<int, int>, int>& pf_index,
                                           const Graph& cur, FillMask fill,
                                           std::set<FillMask, FillMaskLess>& visited,
                                           std::set<FillMask, FillMaskLess>& leaves) {
  if (!visited.insert(fill).second) return;
  std::vector<int> cyc = find_chordless_cycle(cur);
  if (cyc.empty()) {
    leaves.insert(fill);
    return;
  }
  const int k = (int)cyc.size();
  for (int i = 0; i < k; i++)
    for (int j = i + 2; j < k; j++) {
      if (i == 0 && j == k - 1) continue;  // consecutive on the cycle
      int a = std::min(cyc[i], cyc[j]), b = std::max(cyc[i], cyc[j]);
      int bit = pf_index.at({a, b});
      FillMask next = fill;
      next[bit >> 6] |= uint64_t(1) << (bit & 63);
      Graph g2 = cur;
      g2.add_edge(a, b);
      enumerate_triangulation_leaves(pf_index, g2, next, visited, leaves);
    }
}

}  // namespace oracle_detail

inline bool brute_is_pmc(const Graph& g, const Bitset& k, const OracleCaps& caps) {
  oracle_check_vertices(g, caps);
  return oracle_detail::pmc_by_definition(g, k);
}

inline std::vector<Bitset> brute_pmcs(const Graph& g, const OracleCaps& caps) {
  oracle_check_vertices(g, caps);
  std::vector<Bitset> out;
  const int n = g.n();
  for (uint64_t mask = 1; n > 0 && mask < (uint64_t(1) << n); mask++) {
    Bitset k(n);
    for (int v = 0; v < n; v++)
      if ((mask >> v) & 1) k.set(v);
    if (oracle_detail::pmc_by_definition(g, k)) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return a.lex_less(b);
  });
  return out;
}

// All minimal triangulations, by two independent routes that must agree:
// (1) saturate every maximal pairwise-parallel family of minimal separators;
// (2) branch on the chords of a chordless cycle and keep the inclusion-
// minimal chordalizing fill sets among the chordal leaves.
inline std::vector<FillAssignment> brute_minimal_triangulations(const Graph& g,
                                                                const OracleCaps& caps) {
  oracle_check_vertices(g, caps);

  // Route 1: maximal parallel families.
  std::vector<Bitset> delta = brute_minimal_separators(g, caps);
  const int nd = (int)delta.size();
  std::vector<Bitset> par(nd, Bitset(std::max(nd, 1)));
  for (int i = 0; i < nd; i++)
    for (int j = 0; j < nd; j++)
      if (i != j && are_parallel(g, delta[i], delta[j])) par[i].set(j);
  std::vector<std::vector<int>> families;
  if (nd == 0) {
    families.push_back({});
  } else {
    // Bron-Kerbosch over the parallel relation.
    std::vector<int> r;
    auto bk = [&](auto&& self, Bitset p, Bitset x) -> void {
      if (p.empty() && x.empty()) {
        families.push_back(r);
        return;
      }
      int pivot = (p | x).first();
      Bitset cand = p;
      cand.subtract(par[pivot]);
      cand.for_each([&](int v) {
        r.push_back(v);
        Bitset p2 = p & par[v], x2 = x & par[v];
        self(self, p2, x2);
        r.pop_back();
        p.reset(v);
        x.set(v);
      });
    };
    bk(bk, Bitset::full(nd), Bitset(nd));
  }
  std::set<std::vector<std::pair<int, int>>> fills1;
  for (const auto& fam : families) {
    std::vector<VertexSet> sets;
    sets.reserve(fam.size());
    for (int i : fam) sets.push_back(delta[i].to_vertex_set());
    Graph h = g.saturated(sets);
    if (!h.is_chordal())
      throw std::logic_error("saturating a maximal parallel family must triangulate");
    fills1.insert(h.fill_relative_to(g).edges);
  }

  // Route 2: chord branching.
  auto pf = g.potential_fill_edges();
  if (pf.size() > 128) throw OracleCapExceeded("oracle refuses > 128 potential fill edges");
  std::map<std::pair<int, int>, int> pf_index;
  for (size_t i = 0; i < pf.size(); i++) pf_index[pf[i]] = (int)i;
  std::set<oracle_detail::FillMask, oracle_detail::FillMaskLess> visited, leaves;
  oracle_detail::enumerate_triangulation_leaves(pf_index, g, {{0, 0}}, visited, leaves);
  std::set<std::vector<std::pair<int, int>>> fills2;
  for (const auto& mask : leaves) {
    bool minimal = true;
    for (const auto& other : leaves)
      if (other != mask && oracle_detail::mask_subset(other, mask)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pf.size(); i++)
      if ((mask[i >> 6] >> (i & 63)) & 1) edges.push_back(pf[i]);
    fills2.insert(std::move(edges));
  }

  if (fills1 != fills2) throw std::logic_error("oracle triangulation methods disagree");
  std::vector<FillAssignment> out;
  for (const auto& e : fills1) out.push_back(FillAssignment{e});
  return out;
}

inline Rational brute_mfi(const Graph& g, const ColorFillWeight& fw, const OracleCaps& caps) {
  auto mts = brute_minimal_triangulations(g, caps);
  Rational best = weight_of_fill(fw, mts[0]);
  for (const auto& fa : mts) {
    Rational w = weight_of_fill(fw, fa);
    if (w < best) best = w;
  }
  return best;
}

inline std::vector<VertexSet> brute_delta_min(const Graph& g, const ColorFillWeight& fw,
                                              const OracleCaps& caps) {
  auto mts = brute_minimal_triangulations(g, caps);
  Rational best = weight_of_fill(fw, mts[0]);
  for (const auto& fa : mts) {
    Rational w = weight_of_fill(fw, fa);
    if (w < best) best = w;
  }
  std::set<VertexSet> acc;
  for (const auto& fa : mts) {
    if (weight_of_fill(fw, fa) != best) continue;
    for (const Bitset& s : brute_minimal_separators(g.with_fill(fa), caps))
      acc.insert(s.to_vertex_set());
  }
  return {acc.begin(), acc.end()};
}

struct BruteMaxCompat {
  Rational weight;                       // optimal total weight
  std::vector<std::vector<int>> optima;  // every optimal character subset
};

inline BruteMaxCompat brute_max_compat(const CharacterSet& cs, const OracleCaps& caps) {
  if ((int)cs.characters.size() > caps.max_characters)
    throw OracleCapExceeded("oracle refuses " + std::to_string(cs.characters.size()) +
                            " characters (cap " + std::to_string(caps.max_characters) + ")");
  BruteMaxCompat best;
  best.weight = Rational(0);
  const int k = (int)cs.characters.size();
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); mask++) {
    std::vector<int> keep;
    Rational w(0);
    for (int c = 0; c < k; c++)
      if ((mask >> c) & 1) {
        keep.push_back(c);
        w += cs.weight_of(c);
      }
    ColoredGraph cg = build_pig(restrict_characters(cs, keep));
    oracle_check_vertices(cg.graph, caps);
    if (!brute_mfi(cg.graph, indicator_weight(cg), caps).is_zero()) continue;
    if (w > best.weight) {
      best.weight = w;
      best.optima.clear();
    }
    if (w == best.weight) best.optima.push_back(keep);
  }
  std::sort(best.optima.begin(), best.optima.end());
  return best;
}

}  // namespace phylotri
