#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace phylotri {

// Canonical vertex set: strictly increasing vertex ids.
using VertexSet = std::vector<int>;

inline bool is_canonical(const VertexSet& s) {
  for (size_t i = 1; i < s.size(); i++)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

// Fixed-capacity dynamic bitset sized to the host graph's vertex count.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return a.w_ != b.w_; }

  // Order matching lexicographic comparison of canonical vertex sets: the set
  // owning the lowest differing bit comes first.
  // Lexicographic order of the ascending vertex sequences, so {0,3} < {1}
  // but {0} < {0,1} (a strict prefix comes first).
  bool lex_less(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); i++) {
      uint64_t d = w_[i] ^ o.w_[i];
      if (!d) continue;
      int b = __builtin_ctzll(d);
      bool mine = (w_[i] >> b) & 1;
      const auto& rest = mine ? o.w_ : w_;
      uint64_t above = rest[i] & ~((uint64_t(2) << b) - 1);
      bool other_continues = above != 0;
      for (size_t j = i + 1; j < w_.size() && !other_continues; j++)
        if (rest[j]) other_continues = true;
      return mine == other_continues;
    }
    return false;
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); i++) {
      uint64_t x = w_[i];
      while (x) {
        f(int(i * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  VertexSet to_vertex_set() const {
    VertexSet r;
    r.reserve(count());
    for_each([&](int v) { r.push_back(v); });
    return r;
  }
  static Bitset of(int n, const VertexSet& vs) {
    Bitset b(n);
    for (int v : vs) b.set(v);
    return b;
  }
  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; i++) b.set(i);
    return b;
  }

  uint64_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ (uint64_t)n_;
    for (uint64_t x : w_) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  const uint64_t* data() const { return w_.data(); }
  int words() const { return (int)w_.size(); }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return (size_t)b.hash(); }
};

// A set of extra edges turning a graph into a supergraph; kept canonical
// (u < v, pairs sorted).
struct FillAssignment {
  std::vector<std::pair<int, int>> edges;

  void add(int u, int v) {
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  void canonicalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  size_t size() const { return edges.size(); }
  bool operator==(const FillAssignment& o) const { return edges == o.edges; }
};

// Undirected simple graph over dense vertex ids 0..n-1 with O(1) edge tests.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), m_(0), nb_(n, Bitset(n)) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  int m() const { return m_; }

  void add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    if (nb_[u].get(v)) return;
    nb_[u].set(v);
    nb_[v].set(u);
    m_++;
  }
  bool has_edge(int u, int v) const { return nb_[u].get(v); }
  const Bitset& nb(int v) const { return nb_[v]; }

  VertexSet neighbors(int v) const { return nb_[v].to_vertex_set(); }

  bool is_complete() const { return (long long)m_ * 2 == (long long)n_ * (n_ - 1); }

  // N(C): all vertices outside C adjacent to C.
  Bitset neighborhood(const Bitset& c) const {
    Bitset r(n_);
    c.for_each([&](int v) { r |= nb_[v]; });
    r.subtract(c);
    return r;
  }

  Bitset component_of(int v, const Bitset& removed) const {
    assert(!removed.get(v));
    Bitset comp(n_);
    comp.set(v);
    Bitset frontier = comp;
    while (!frontier.empty()) {
      Bitset nxt(n_);
      frontier.for_each([&](int u) { nxt |= nb_[u]; });
      nxt.subtract(removed);
      nxt.subtract(comp);
      comp |= nxt;
      frontier = nxt;
    }
    return comp;
  }

  // Connected components of G - removed, in order of smallest contained vertex.
  std::vector<Bitset> components(const Bitset& removed) const {
    std::vector<Bitset> out;
    Bitset todo = Bitset::full(n_);
    todo.subtract(removed);
    for (int v = todo.first(); v != -1; v = todo.first()) {
      Bitset comp = component_of(v, removed);
      todo.subtract(comp);
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<Bitset> components() const { return components(Bitset(n_)); }

  bool is_connected() const {
    if (n_ == 0) return true;
    return component_of(0, Bitset(n_)).count() == n_;
  }

  // Non-adjacent unordered pairs, u < v, lexicographic.
  std::vector<std::pair<int, int>> potential_fill_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++)
      for (int v = u + 1; v < n_; v++)
        if (!nb_[u].get(v)) out.emplace_back(u, v);
    return out;
  }

  // Copy with every listed vertex set turned into a clique.
  Graph saturated(const std::vector<VertexSet>& sets) const {
    Graph g = *this;
    for (const auto& s : sets)
      for (size_t i = 0; i < s.size(); i++)
        for (size_t j = i + 1; j < s.size(); j++) g.add_edge(s[i], s[j]);
    return g;
  }

  Graph with_fill(const FillAssignment& fa) const {
    Graph g = *this;
    for (auto [u, v] : fa.edges) g.add_edge(u, v);
    return g;
  }

  FillAssignment fill_relative_to(const Graph& sub) const {
    assert(n_ == sub.n_);
    FillAssignment fa;
    for (int u = 0; u < n_; u++)
      for (int v = u + 1; v < n_; v++)
        if (nb_[u].get(v) && !sub.nb_[u].get(v)) fa.add(u, v);
    return fa;
  }

  // Induced subgraph on vertices 0..k-1 (ids preserved).
  Graph induced_prefix(int k) const {
    Graph g(k);
    for (int u = 0; u < k; u++)
      for (int v = u + 1; v < k; v++)
        if (nb_[u].get(v)) g.add_edge(u, v);
    return g;
  }

  // Induced subgraph on `keep`, reindexed densely; old_ids[i] = original id.
  Graph induced(const Bitset& keep, std::vector<int>* old_ids = nullptr) const {
    VertexSet vs = keep.to_vertex_set();
    Graph g((int)vs.size());
    for (size_t i = 0; i < vs.size(); i++)
      for (size_t j = i + 1; j < vs.size(); j++)
        if (nb_[vs[i]].get(vs[j])) g.add_edge((int)i, (int)j);
    if (old_ids) *old_ids = vs;
    return g;
  }

  // Maximum cardinality search; visit order, ties to the smallest id.
  std::vector<int> mcs_order() const {
    std::vector<int> weight(n_, 0), order;
    std::vector<bool> seen(n_, false);
    order.reserve(n_);
    for (int step = 0; step < n_; step++) {
      int best = -1;
      for (int v = 0; v < n_; v++)
        if (!seen[v] && (best == -1 || weight[v] > weight[best])) best = v;
      seen[best] = true;
      order.push_back(best);
      nb_[best].for_each([&](int u) {
        if (!seen[u]) weight[u]++;
      });
    }
    return order;
  }

  // Chordality test: the reverse of an MCS visit order must be a perfect
  // elimination ordering.
  bool is_chordal() const {
    std::vector<int> order = mcs_order();
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; i++) pos[order[i]] = i;
    for (int i = 0; i < n_; i++) {
      int v = order[i];
      int parent = -1;
      nb_[v].for_each([&](int u) {
        if (pos[u] < i && (parent == -1 || pos[u] > pos[parent])) parent = u;
      });
      if (parent == -1) continue;
      bool ok = true;
      nb_[v].for_each([&](int u) {
        if (u != parent && pos[u] < i && !nb_[parent].get(u)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  // Maximal cliques of a chordal graph, canonical and sorted lexicographically.
  std::vector<VertexSet> maximal_cliques_chordal() const {
    assert(is_chordal());
    std::vector<int> order = mcs_order();
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; i++) pos[order[i]] = i;
    std::vector<Bitset> cands;
    for (int i = 0; i < n_; i++) {
      int v = order[i];
      Bitset c(n_);
      c.set(v);
      nb_[v].for_each([&](int u) {
        if (pos[u] < i) c.set(u);
      });
      cands.push_back(std::move(c));
    }
    std::vector<Bitset> maximal;
    for (size_t i = 0; i < cands.size(); i++) {
      bool keep = true;
      for (size_t j = 0; j < cands.size() && keep; j++)
        if (i != j && cands[i].subset_of(cands[j]) && cands[i] != cands[j]) keep = false;
      if (keep)
        if (std::find(maximal.begin(), maximal.end(), cands[i]) == maximal.end())
          maximal.push_back(cands[i]);
    }
    std::vector<VertexSet> out;
    out.reserve(maximal.size());
    for (const auto& b : maximal) out.push_back(b.to_vertex_set());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> nb_;
};

// Clique tree of a chordal graph: nodes are the maximal cliques, edges chosen
// as a maximum-weight spanning forest of the clique intersection graph, which
// yields the induced-subtree property. Disconnected graphs give a forest.
struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> edges;
};

inline CliqueTree clique_tree(const Graph& g) {
  CliqueTree ct;
  ct.cliques = g.maximal_cliques_chordal();
  const int q = (int)ct.cliques.size();
  std::vector<Bitset> bits;
  bits.reserve(q);
  for (const auto& c : ct.cliques) bits.push_back(Bitset::of(g.n(), c));
  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < q; i++)
    for (int j = i + 1; j < q; j++) {
      int w = (bits[i] & bits[j]).count();
      if (w > 0) cands.push_back({w, i, j});
    }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<int> dsu(q);
  for (int i = 0; i < q; i++) dsu[i] = i;
  auto find = [&](int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  for (const auto& c : cands) {
    int a = find(c.i), b = find(c.j);
    if (a == b) continue;
    dsu[a] = b;
    ct.edges.emplace_back(c.i, c.j);
  }
  std::sort(ct.edges.begin(), ct.edges.end());
  return ct;
}

}  // namespace phylotri
