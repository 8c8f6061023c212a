#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "phylotri/characters.hpp"
#include "phylotri/graph.hpp"
#include "phylotri/pmc.hpp"
#include "phylotri/rational.hpp"
#include "phylotri/separators.hpp"

namespace phylotri {

// Weight of completing U into a clique: the fill-weight sum over its
// non-adjacent pairs.
inline Rational fill_fw(const Graph& g, const ColorFillWeight& fw, const Bitset& u) {
  VertexSet vs = u.to_vertex_set();
  Rational t(0);
  for (size_t i = 0; i < vs.size(); i++)
    for (size_t j = i + 1; j < vs.size(); j++)
      if (!g.has_edge(vs[i], vs[j])) t += fw.at(vs[i], vs[j]);
  return t;
}

struct BlockEntry {
  Bitset sep, comp, uni;
  std::optional<Rational> value;  // engaged once processed; +inf while unset
  int choice = -1;                // optimal covering pmc, index into DpTable::pmcs
  std::vector<int> cand_pmcs;
};

// Table of the block dynamic program for one connected, non-complete graph.
struct DpTable {
  std::vector<Bitset> delta;               // lexicographically sorted
  std::vector<Bitset> pmcs;                // lexicographically sorted
  std::vector<BlockEntry> blocks;          // ascending |S union C|, the processing order
  std::unordered_map<Bitset, int, BitsetHash> block_of_comp;
  std::vector<std::vector<int>> pmc_assoc;  // pmc -> indices of its associated blocks
  std::vector<Rational> sep_value;          // aligned with delta
};

// Bottom-up optimum over full blocks: a block's value is the best, over
// potential maximal cliques K wedged between its separator and its closure,
// of the fill cost of K (beyond the separator's own) plus the values of K's
// associated sub-blocks. Block values start undefined (+inf) and every block
// must be reached through some K; a miss is an internal failure.
inline DpTable minimum_fill_dp(const Graph& g, const ColorFillWeight& fw,
                               const std::vector<Bitset>& delta,
                               const std::vector<Bitset>& pmcs) {
  DpTable t;
  t.delta = delta;
  t.pmcs = pmcs;

  for (const FullBlock& b : all_full_blocks(g, t.delta))
    t.blocks.push_back({b.sep, b.comp, b.sep | b.comp, std::nullopt, -1, {}});
  for (size_t i = 0; i < t.blocks.size(); i++) t.block_of_comp.emplace(t.blocks[i].comp, (int)i);

  std::unordered_map<Bitset, Rational, BitsetHash> fill_memo;
  auto fill_of = [&](const Bitset& u) {
    auto it = fill_memo.find(u);
    if (it != fill_memo.end()) return it->second;
    Rational v = fill_fw(g, fw, u);
    fill_memo.emplace(u, v);
    return v;
  };

  // Route each (pmc, contained separator) pair to the unique full block it
  // covers; the block's candidate list then holds every K with S < K <= S+C.
  t.pmc_assoc.resize(t.pmcs.size());
  for (size_t ki = 0; ki < t.pmcs.size(); ki++) {
    const Bitset& k = t.pmcs[ki];
    std::vector<Bitset> seps;
    for (const FullBlock& b : blocks_associated(g, k)) {
      auto it = t.block_of_comp.find(b.comp);
      if (it == t.block_of_comp.end() || t.blocks[it->second].sep != b.sep)
        throw std::logic_error("block table is missing an associated block of a pmc");
      t.pmc_assoc[ki].push_back(it->second);
      if (std::find(seps.begin(), seps.end(), b.sep) == seps.end()) seps.push_back(b.sep);
    }
    for (const Bitset& s : seps) {
      Bitset rest = k;
      rest.subtract(s);
      assert(!rest.empty());
      Bitset target = g.component_of(rest.first(), s);
      auto it = t.block_of_comp.find(target);
      if (it != t.block_of_comp.end() && t.blocks[it->second].sep == s)
        t.blocks[it->second].cand_pmcs.push_back((int)ki);
    }
  }

  for (BlockEntry& b : t.blocks) {
    Rational fill_s = fill_of(b.sep);
    std::optional<Rational> best;
    int best_k = -1;
    for (int ki : b.cand_pmcs) {
      Rational val = fill_of(t.pmcs[ki]) - fill_s;
      for (int idx : t.pmc_assoc[ki]) {
        const BlockEntry& sub = t.blocks[idx];
        if (!sub.comp.subset_of(b.comp)) continue;
        if (!sub.value) throw std::logic_error("sub-block evaluated out of order");
        val += *sub.value;
      }
      if (!best || val < *best || (val == *best && t.pmcs[ki].lex_less(t.pmcs[best_k]))) {
        best = val;
        best_k = ki;
      }
    }
    if (!best) throw std::logic_error("full block admits no covering potential maximal clique");
    b.value = best;
    b.choice = best_k;
  }

  t.sep_value.reserve(t.delta.size());
  for (const Bitset& s : t.delta) {
    Rational val = fill_of(s);
    for (const Bitset& comp : g.components(s)) {
      auto it = t.block_of_comp.find(comp);
      if (it == t.block_of_comp.end())
        throw std::logic_error("component of a minimal separator is not a known block");
      val += *t.blocks[it->second].value;
    }
    t.sep_value.push_back(val);
  }
  return t;
}

struct MfiResult {
  Rational value;
  std::vector<VertexSet> delta_min;  // separators of the minimum-weight minimal triangulations
  FillAssignment witness;            // fill of one optimal minimal triangulation
  long long minsep_count = 0;
  long long pmc_count = 0;
};

namespace detail {

inline void add_clique_fill(const Graph& g, const Bitset& u, FillAssignment& fa) {
  VertexSet vs = u.to_vertex_set();
  for (size_t i = 0; i < vs.size(); i++)
    for (size_t j = i + 1; j < vs.size(); j++)
      if (!g.has_edge(vs[i], vs[j])) fa.add(vs[i], vs[j]);
}

inline void collect_witness(const Graph& g, const DpTable& t, int bi, FillAssignment& fa) {
  const BlockEntry& b = t.blocks[bi];
  add_clique_fill(g, t.pmcs[b.choice], fa);
  for (int idx : t.pmc_assoc[b.choice])
    if (t.blocks[idx].comp.subset_of(b.comp)) collect_witness(g, t, idx, fa);
}

}  // namespace detail

// Optimum over all minimal triangulations of a connected, non-complete
// graph: minimize over minimal separators S the cost of saturating S plus
// the values of the blocks of G - S. The witness retraces the argmin choices.
inline MfiResult global_result(const Graph& g, const DpTable& t) {
  if (t.delta.empty()) throw std::logic_error("no minimal separator in a non-complete graph");
  std::optional<Rational> best;
  for (const Rational& v : t.sep_value)
    if (!best || v < *best) best = v;

  MfiResult r;
  r.value = *best;
  r.minsep_count = (long long)t.delta.size();
  r.pmc_count = (long long)t.pmcs.size();
  int first_arg = -1;
  for (size_t i = 0; i < t.delta.size(); i++)
    if (t.sep_value[i] == *best) {
      r.delta_min.push_back(t.delta[i].to_vertex_set());
      if (first_arg == -1) first_arg = (int)i;
    }

  const Bitset& s_star = t.delta[first_arg];
  detail::add_clique_fill(g, s_star, r.witness);
  for (const Bitset& comp : g.components(s_star))
    detail::collect_witness(g, t, t.block_of_comp.at(comp), r.witness);
  r.witness.canonicalize();
  return r;
}

// Full pipeline for arbitrary graphs: each connected component is solved
// independently (complete components cost nothing) and the results combine
// by summing values and uniting separator sets and witnesses. The pmc
// cardinality bound is asserted per component on the way.
inline MfiResult minimum_fill(const Graph& g, const ColorFillWeight& fw) {
  MfiResult total;
  total.value = Rational(0);
  for (const Bitset& comp : g.components()) {
    VertexSet ids;
    Graph sub = g.induced(comp, &ids);
    if (sub.is_complete()) {
      total.pmc_count += 1;  // the component itself
      continue;
    }
    ColorFillWeight sub_fw;
    sub_fw.weight = fw.weight;
    sub_fw.color.reserve(ids.size());
    for (int v : ids) sub_fw.color.push_back(fw.color[v]);

    std::vector<Bitset> delta = enumerate_minimal_separators(sub);
    std::vector<Bitset> pmcs = enumerate_pmcs(sub, delta);
    long long nd = (long long)delta.size(), nn = sub.n();
    if ((long long)pmcs.size() > nn * nd * nd + nn * nd + 1)
      throw std::logic_error("pmc count exceeds its cardinality bound");

    DpTable table = minimum_fill_dp(sub, sub_fw, delta, pmcs);
    MfiResult part = global_result(sub, table);

    total.value += part.value;
    total.minsep_count += part.minsep_count;
    total.pmc_count += part.pmc_count;
    for (const VertexSet& s : part.delta_min) {
      VertexSet mapped;
      mapped.reserve(s.size());
      for (int v : s) mapped.push_back(ids[v]);
      total.delta_min.push_back(std::move(mapped));
    }
    for (auto [u, v] : part.witness.edges) total.witness.add(ids[u], ids[v]);
  }
  std::sort(total.delta_min.begin(), total.delta_min.end());
  total.witness.canonicalize();
  return total;
}

}  // namespace phylotri
