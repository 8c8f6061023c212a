#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "phylotri/characters.hpp"
#include "phylotri/graph.hpp"
#include "phylotri/triangulation_dp.hpp"

namespace phylotri {

// Unrooted tree with every taxon assigned to a node. Nodes of degree at most
// two always carry at least one taxon.
struct XTree {
  std::vector<std::vector<int>> adj;  // per node, sorted neighbor lists
  std::vector<VertexSet> node_taxa;   // per node, taxon ids
  std::vector<int> phi;               // taxon id -> node

  int node_count() const { return (int)adj.size(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < node_count(); u++)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
};

// Node set of the minimal subtree spanning the given tree nodes.
inline std::vector<int> spanning_subtree_nodes(const XTree& t, std::vector<int> targets) {
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (targets.empty()) return {};
  std::vector<int> parent(t.node_count(), -2);
  std::vector<int> stack = {targets[0]};
  parent[targets[0]] = -1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : t.adj[u])
      if (parent[v] == -2) {
        parent[v] = u;
        stack.push_back(v);
      }
  }
  std::vector<bool> in(t.node_count(), false);
  in[targets[0]] = true;
  for (int x : targets)
    for (int u = x; !in[u]; u = parent[u]) in[u] = true;
  std::vector<int> out;
  for (int u = 0; u < t.node_count(); u++)
    if (in[u]) out.push_back(u);
  return out;
}

inline std::vector<std::vector<int>> cell_subtrees(const XTree& t, const Character& chi) {
  std::vector<std::vector<int>> out;
  for (const VertexSet& cell : chi.cells) {
    std::vector<int> targets;
    targets.reserve(cell.size());
    for (int x : cell) targets.push_back(t.phi[x]);
    out.push_back(spanning_subtree_nodes(t, std::move(targets)));
  }
  return out;
}

// A character is displayed when the minimal subtrees of its cells are
// pairwise node-disjoint.
inline bool displays(const XTree& t, const Character& chi) {
  std::vector<bool> seen(t.node_count(), false);
  for (const auto& nodes : cell_subtrees(t, chi))
    for (int u : nodes) {
      if (seen[u]) return false;
      seen[u] = true;
    }
  return true;
}

inline bool displays_all(const XTree& t, const CharacterSet& cs) {
  for (const Character& chi : cs.characters)
    if (!displays(t, chi)) return false;
  return true;
}

// Edge uv is distinguished by a character when its endpoints lie in the
// minimal subtrees of two distinct cells.
inline bool edge_distinguished(const XTree& t, int u, int v, const Character& chi) {
  auto subs = cell_subtrees(t, chi);
  for (size_t a = 0; a < subs.size(); a++)
    for (size_t b = 0; b < subs.size(); b++) {
      if (a == b) continue;
      bool ua = std::binary_search(subs[a].begin(), subs[a].end(), u);
      bool vb = std::binary_search(subs[b].begin(), subs[b].end(), v);
      if (ua && vb) return true;
    }
  return false;
}

// Ternary: every non-leaf node has degree exactly three.
inline bool is_ternary(const XTree& t) {
  for (int u = 0; u < t.node_count(); u++) {
    size_t d = t.adj[u].size();
    if (d >= 2 && d != 3) return false;
  }
  return true;
}

// Builds an X-tree from a proper triangulation of the partition intersection
// graph: take a clique tree, place each taxon at the lexicographically
// smallest clique containing all its cells, then suppress unlabeled nodes of
// degree at most two. Components of the triangulation get joined at their
// first cliques; cells never span components, so displays are unaffected.
inline XTree xtree_from_proper_triangulation(const CharacterSet& cs, const ColoredGraph& cg,
                                             const FillAssignment& fa) {
  if (!is_proper_fill(cg, fa))
    throw std::invalid_argument("fill joins two cells of one character");
  Graph h = cg.graph.with_fill(fa);
  if (!h.is_chordal()) throw std::invalid_argument("fill is not a triangulation");

  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> tree_edges;
  if (h.n() > 0) {
    CliqueTree ct = clique_tree(h);
    cliques = std::move(ct.cliques);
    tree_edges = std::move(ct.edges);
    // Join the clique forest into one tree, component by component.
    std::vector<int> dsu(cliques.size());
    for (size_t i = 0; i < dsu.size(); i++) dsu[i] = (int)i;
    auto find = [&](int x) {
      while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
      return x;
    };
    for (auto [a, b] : tree_edges) dsu[find(a)] = find(b);
    for (size_t i = 1; i < cliques.size(); i++)
      if (find((int)i) != find(0)) {
        tree_edges.emplace_back(0, (int)i);
        dsu[find((int)i)] = find(0);
      }
  } else {
    cliques.push_back({});
  }

  const int m = (int)cliques.size();
  std::vector<Bitset> clique_bits;
  clique_bits.reserve(m);
  for (const auto& c : cliques) clique_bits.push_back(Bitset::of(std::max(h.n(), 1), c));

  std::vector<VertexSet> node_taxa(m);
  std::vector<int> phi(cs.taxa.size(), 0);
  for (size_t x = 0; x < cs.taxa.size(); x++) {
    Bitset need(std::max(h.n(), 1));
    for (size_t c = 0; c < cs.characters.size(); c++)
      for (size_t a = 0; a < cs.characters[c].cells.size(); a++)
        if (std::binary_search(cs.characters[c].cells[a].begin(),
                               cs.characters[c].cells[a].end(), (int)x))
          need.set(cg.vertex_of[c][a]);
    if (!need.empty()) {
      int node = -1;
      for (int i = 0; i < m && node == -1; i++)
        if (need.subset_of(clique_bits[i])) node = i;
      if (node == -1) throw std::logic_error("taxon cells fit in no clique of the triangulation");
      phi[x] = node;
    }
    node_taxa[phi[x]].push_back((int)x);
  }

  // Suppress unlabeled nodes of degree <= 2.
  std::vector<std::set<int>> nb(m);
  for (auto [a, b] : tree_edges) {
    nb[a].insert(b);
    nb[b].insert(a);
  }
  std::vector<bool> alive(m, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < m; u++) {
      if (!alive[u] || !node_taxa[u].empty()) continue;
      if (nb[u].size() == 1) {
        int v = *nb[u].begin();
        nb[v].erase(u);
        nb[u].clear();
        alive[u] = false;
        changed = true;
      } else if (nb[u].size() == 2) {
        int a = *nb[u].begin(), b = *std::next(nb[u].begin());
        nb[a].erase(u);
        nb[b].erase(u);
        nb[a].insert(b);
        nb[b].insert(a);
        nb[u].clear();
        alive[u] = false;
        changed = true;
      } else if (nb[u].empty() && m > 1) {
        alive[u] = false;
        changed = true;
      }
    }
  }

  std::vector<int> remap(m, -1);
  int live = 0;
  for (int u = 0; u < m; u++)
    if (alive[u]) remap[u] = live++;
  if (live == 0) {  // no taxa at all
    XTree single;
    single.adj.resize(1);
    single.node_taxa.resize(1);
    single.phi.assign(cs.taxa.size(), 0);
    return single;
  }
  XTree out;
  out.adj.resize(live);
  out.node_taxa.resize(live);
  out.phi.resize(cs.taxa.size());
  for (int u = 0; u < m; u++) {
    if (!alive[u]) continue;
    for (int v : nb[u]) out.adj[remap[u]].push_back(remap[v]);
    std::sort(out.adj[remap[u]].begin(), out.adj[remap[u]].end());
    out.node_taxa[remap[u]] = node_taxa[u];
  }
  for (size_t x = 0; x < cs.taxa.size(); x++) out.phi[x] = remap[phi[x]];
  return out;
}

// Compatibility solver: the characters admit a perfect phylogeny iff the
// partition intersection graph has a zero-weight minimal triangulation under
// the monochromatic indicator weight.
inline std::optional<XTree> solve_perfect_phylogeny(const CharacterSet& cs) {
  ColoredGraph cg = build_pig(cs);
  MfiResult res = minimum_fill(cg.graph, indicator_weight(cg));
  if (!res.value.is_zero()) return std::nullopt;
  XTree t = xtree_from_proper_triangulation(cs, cg, res.witness);
  if (!displays_all(t, cs)) throw std::logic_error("constructed tree fails to display a character");
  return t;
}

struct MaxCompatResult {
  std::vector<int> kept;  // indices of a maximum-weight compatible subset
  Rational weight;        // its total weight
  XTree tree;
};

// Weighted two-state maximum compatibility: the minimum weighted fill over
// minimal triangulations accounts exactly for the discarded characters, so
// the witness's displayed set is an optimum.
inline MaxCompatResult solve_max_compat_two_state(const CharacterSet& cs) {
  cs.validate();
  for (const Character& chi : cs.characters)
    if (chi.cells.size() != 2)
      throw std::invalid_argument("character " + chi.name + " does not have exactly two cells");
  ColoredGraph cg = build_pig(cs);
  MfiResult res = minimum_fill(cg.graph, induced_fill_weight(cs, cg));
  MaxCompatResult out;
  out.kept = displayed_characters(cg, res.witness);
  out.weight = Rational(0);
  for (int c : out.kept) out.weight += cs.weight_of(c);
  if (out.weight + res.value != cs.total_weight())
    throw std::logic_error("two-state weight accounting identity violated");

  std::optional<XTree> t = solve_perfect_phylogeny(restrict_characters(cs, out.kept));
  if (!t) throw std::logic_error("displayed characters of a minimal triangulation are compatible");
  out.tree = std::move(*t);
  return out;
}

enum class UniqueVerdict {
  Unique,
  NoPerfectPhylogeny,
  MultipleMinimalTriangulations,
  NotTernary,
  NotDistinguished,
};

inline const char* verdict_name(UniqueVerdict v) {
  switch (v) {
    case UniqueVerdict::Unique: return "Unique";
    case UniqueVerdict::NoPerfectPhylogeny: return "NoPerfectPhylogeny";
    case UniqueVerdict::MultipleMinimalTriangulations: return "MultipleMinimalTriangulations";
    case UniqueVerdict::NotTernary: return "NotTernary";
    case UniqueVerdict::NotDistinguished: return "NotDistinguished";
  }
  return "?";
}

struct UniquePpResult {
  UniqueVerdict verdict;
  std::optional<XTree> tree;  // a perfect phylogeny whenever one exists
};

// Uniqueness of the perfect phylogeny: a proper minimal triangulation must
// exist, it must be the only one (the zero-weight separators pairwise
// parallel), and the resulting tree must be ternary with every edge
// distinguished.
inline UniquePpResult solve_unique_pp(const CharacterSet& cs) {
  ColoredGraph cg = build_pig(cs);
  MfiResult res = minimum_fill(cg.graph, indicator_weight(cg));
  if (!res.value.is_zero()) return {UniqueVerdict::NoPerfectPhylogeny, std::nullopt};

  std::vector<Bitset> dmin;
  dmin.reserve(res.delta_min.size());
  for (const VertexSet& s : res.delta_min) dmin.push_back(Bitset::of(cg.graph.n(), s));
  bool parallel = pairwise_parallel(cg.graph, dmin);

  Graph sat = cg.graph.saturated(res.delta_min);
  FillAssignment fill = parallel ? sat.fill_relative_to(cg.graph) : res.witness;
  XTree t = xtree_from_proper_triangulation(cs, cg, fill);
  if (!displays_all(t, cs)) throw std::logic_error("constructed tree fails to display a character");
  if (!parallel) return {UniqueVerdict::MultipleMinimalTriangulations, std::move(t)};

  if (!is_ternary(t)) return {UniqueVerdict::NotTernary, std::move(t)};
  for (auto [u, v] : t.edges()) {
    bool dist = false;
    for (const Character& chi : cs.characters)
      if (edge_distinguished(t, u, v, chi)) {
        dist = true;
        break;
      }
    if (!dist) return {UniqueVerdict::NotDistinguished, std::move(t)};
  }
  return {UniqueVerdict::Unique, std::move(t)};
}

}  // namespace phylotri
