#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <vector>

#include "phylotri/graph.hpp"
#include "phylotri/separators.hpp"

namespace phylotri {

// K is a potential maximal clique iff (a) no component of G - K sees all of
// K and (b) every non-adjacent pair of K lies in some component neighborhood.
inline bool is_pmc(const Graph& g, const Bitset& k) {
  if (k.empty()) return false;
  std::vector<Bitset> hoods;
  Bitset todo = Bitset::full(g.n());
  todo.subtract(k);
  for (int v = todo.first(); v != -1; v = todo.first()) {
    Bitset comp = g.component_of(v, k);
    todo.subtract(comp);
    Bitset nc = g.neighborhood(comp);
    if (nc == k) return false;
    hoods.push_back(std::move(nc));
  }
  bool ok = true;
  k.for_each([&](int u) {
    if (!ok) return;
    Bitset cover(g.n());
    for (const Bitset& h : hoods)
      if (h.get(u)) cover |= h;
    cover |= g.nb(u);
    cover.set(u);
    if (!k.subset_of(cover)) ok = false;
  });
  return ok;
}

// Associated blocks of K: the full blocks (N(C), C) over components C of
// G - K. For a potential maximal clique these neighborhoods are exactly the
// minimal separators contained in K.
inline std::vector<FullBlock> blocks_associated(const Graph& g, const Bitset& k) {
  std::vector<FullBlock> out;
  for (const Bitset& comp : g.components(k)) out.push_back({g.neighborhood(comp), comp});
  return out;
}

namespace detail {

// Open-addressing set of fixed-width bitsets stored in a flat arena; the
// candidate generation below inserts hundreds of millions of masks, so
// per-insert allocation is off the table.
class MaskSet {
 public:
  explicit MaskSet(int words) : words_(words) { rehash(1 << 12); }

  // Returns true when the mask was new.
  bool insert(const uint64_t* m) {
    if ((count_ + 1) * 2 > cap_) rehash(cap_ * 2);
    size_t i = slot(m);
    while (used_[i]) {
      if (equal(&data_[i * words_], m)) return false;
      i = (i + 1) & (cap_ - 1);
    }
    used_[i] = 1;
    std::memcpy(&data_[i * words_], m, words_ * 8);
    count_++;
    return true;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < cap_; i++)
      if (used_[i]) f(&data_[i * words_]);
  }

  size_t size() const { return count_; }

 private:
  size_t slot(const uint64_t* m) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int w = 0; w < words_; w++) h = (h ^ m[w]) * 0xff51afd7ed558ccdull;
    return h & (cap_ - 1);
  }
  bool equal(const uint64_t* a, const uint64_t* b) const {
    return std::memcmp(a, b, words_ * 8) == 0;
  }
  void rehash(size_t cap) {
    std::vector<uint64_t> old_data = std::move(data_);
    std::vector<char> old_used = std::move(used_);
    size_t old_cap = cap_;
    cap_ = cap;
    data_.assign(cap_ * words_, 0);
    used_.assign(cap_, 0);
    count_ = 0;
    for (size_t i = 0; i < old_cap; i++)
      if (old_used[i]) insert(&old_data[i * words_]);
  }

  int words_;
  size_t cap_ = 0;
  size_t count_ = 0;
  std::vector<uint64_t> data_;
  std::vector<char> used_;
};

inline void copy_mask(uint64_t* dst, const Bitset& b, int words) {
  assert(b.words() == words);
  std::memcpy(dst, b.data(), words * 8);
}

inline Bitset mask_to_bitset(const uint64_t* m, int n) {
  Bitset b(n);
  for (int v = 0; v < n; v++)
    if ((m[v >> 6] >> (v & 63)) & 1) b.set(v);
  return b;
}

}  // namespace detail

// Incremental enumeration over vertex prefixes: the potential maximal
// cliques of G[0..i] are found among the previous level's cliques (with and
// without the new vertex), S + {v} for current minimal separators S, and
// S + (T & C) for separator pairs and components C of G[0..i] - S. Each
// candidate is verified with is_pmc, so over-generation is harmless; the
// family is validated against exhaustive enumeration in the tests.
inline std::vector<Bitset> enumerate_pmcs(const Graph& g, const std::vector<Bitset>& delta) {
  const int n = g.n();
  std::vector<Bitset> pmcs;
  if (n == 0) return pmcs;
  const int words = (n + 63) / 64;

  Bitset first(n);
  first.set(0);
  pmcs.push_back(first);

  std::vector<Bitset> prev_delta;
  std::vector<uint64_t> scratch(words), smask(words);
  for (int i = 2; i <= n; i++) {
    const int a = i - 1;
    // Padded prefix: vertices >= i stay isolated, which perturbs neither the
    // minimal separators nor the pmc test for sets inside the prefix.
    Graph gi(n);
    for (int u = 0; u < i; u++)
      for (int v = u + 1; v < i; v++)
        if (g.has_edge(u, v)) gi.add_edge(u, v);
    std::vector<Bitset> di = (i == n) ? delta : enumerate_minimal_separators(gi);

    detail::MaskSet cands(words);
    auto offer_bitset = [&](const Bitset& b) {
      detail::copy_mask(scratch.data(), b, words);
      cands.insert(scratch.data());
    };
    for (const Bitset& k : pmcs) {
      offer_bitset(k);
      Bitset ka = k;
      ka.set(a);
      offer_bitset(ka);
    }
    Bitset lone(n);
    lone.set(a);
    offer_bitset(lone);
    for (const Bitset& s : di) {
      Bitset sa = s;
      sa.set(a);
      offer_bitset(sa);
    }
    std::vector<uint64_t> cand(words);
    for (const Bitset& s : di) {
      std::vector<Bitset> comps = gi.components(s);
      detail::copy_mask(smask.data(), s, words);
      auto pair_with = [&](const Bitset& t) {
        const uint64_t* tm = t.data();
        for (const Bitset& c : comps) {
          const uint64_t* cm = c.data();
          bool nonempty = false;
          for (int w = 0; w < words; w++) {
            cand[w] = tm[w] & cm[w];
            if (cand[w]) nonempty = true;
            cand[w] |= smask[w];
          }
          if (nonempty) cands.insert(cand.data());
        }
      };
      for (const Bitset& t : di) pair_with(t);
      for (const Bitset& t : prev_delta) pair_with(t);
    }

    std::vector<Bitset> next;
    cands.for_each([&](const uint64_t* m) {
      Bitset k = detail::mask_to_bitset(m, n);
      if (is_pmc(gi, k)) next.push_back(std::move(k));
    });
    pmcs = std::move(next);
    prev_delta = std::move(di);
  }

  std::sort(pmcs.begin(), pmcs.end(), [](const Bitset& a, const Bitset& b) {
    return a.lex_less(b);
  });
  return pmcs;
}

}  // namespace phylotri
