#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "phylotri/graph.hpp"
#include "phylotri/rational.hpp"

namespace phylotri {

// A character partitions a subset of the taxa into nonempty disjoint cells;
// taxa it says nothing about simply appear in no cell.
struct Character {
  std::string name;
  std::vector<VertexSet> cells;  // taxon ids, each canonical
};

struct CharacterSet {
  std::vector<std::string> taxa;
  std::vector<Character> characters;
  std::vector<Rational> weights;  // empty, or one positive weight per character

  bool has_weights() const { return !weights.empty(); }

  Rational weight_of(int chi) const {
    return has_weights() ? weights[chi] : Rational(1);
  }

  Rational total_weight() const {
    Rational t(0);
    for (size_t i = 0; i < characters.size(); i++) t += weight_of((int)i);
    return t;
  }

  void validate() const {
    if (has_weights() && weights.size() != characters.size())
      throw std::invalid_argument("weight count does not match character count");
    for (size_t c = 0; c < characters.size(); c++) {
      std::vector<bool> used(taxa.size(), false);
      for (const auto& cell : characters[c].cells) {
        if (cell.empty())
          throw std::invalid_argument("empty cell in character " + characters[c].name);
        if (!is_canonical(cell))
          throw std::invalid_argument("non-canonical cell in character " + characters[c].name);
        for (int t : cell) {
          if (t < 0 || (size_t)t >= taxa.size())
            throw std::invalid_argument("taxon id out of range in character " +
                                        characters[c].name);
          if (used[t])
            throw std::invalid_argument("overlapping cells in character " +
                                        characters[c].name);
          used[t] = true;
        }
      }
      if (has_weights() && !weights[c].is_positive())
        throw std::invalid_argument("non-positive weight for character " +
                                    characters[c].name);
    }
  }
};

// Partition intersection graph: one vertex per (character, cell), an edge
// whenever two cells share a taxon. Same-character vertices are never
// adjacent, so each character is a color class.
struct ColoredGraph {
  Graph graph;
  std::vector<int> color;                    // vertex -> character index
  std::vector<int> cell;                     // vertex -> cell index within its character
  std::vector<std::vector<int>> vertex_of;   // [character][cell] -> vertex id
};

inline ColoredGraph build_pig(const CharacterSet& cs) {
  cs.validate();
  ColoredGraph cg;
  cg.vertex_of.resize(cs.characters.size());
  int n = 0;
  for (size_t c = 0; c < cs.characters.size(); c++) {
    for (size_t a = 0; a < cs.characters[c].cells.size(); a++) {
      cg.vertex_of[c].push_back(n++);
      cg.color.push_back((int)c);
      cg.cell.push_back((int)a);
    }
  }
  cg.graph = Graph(n);
  std::vector<std::vector<int>> incident(cs.taxa.size());
  for (size_t c = 0; c < cs.characters.size(); c++)
    for (size_t a = 0; a < cs.characters[c].cells.size(); a++)
      for (int t : cs.characters[c].cells[a]) incident[t].push_back(cg.vertex_of[c][a]);
  for (const auto& vs : incident)
    for (size_t i = 0; i < vs.size(); i++)
      for (size_t j = i + 1; j < vs.size(); j++) {
        if (cg.color[vs[i]] == cg.color[vs[j]])
          throw std::invalid_argument("overlapping cells within one character");
        cg.graph.add_edge(vs[i], vs[j]);
      }
  return cg;
}

// Fill weight over potential fill edges: monochromatic pairs cost their
// color's weight, bichromatic pairs cost nothing. Unit weights give the
// proper-triangulation indicator.
struct ColorFillWeight {
  std::vector<int> color;
  std::vector<Rational> weight;  // per color, non-negative

  Rational at(int u, int v) const {
    if (color[u] != color[v]) return Rational(0);
    return weight[color[u]];
  }
};

inline int color_count(const ColoredGraph& cg) {
  int colors = (int)cg.vertex_of.size();
  for (int c : cg.color) colors = std::max(colors, c + 1);
  return colors;
}

inline ColorFillWeight indicator_weight(const ColoredGraph& cg) {
  return ColorFillWeight{cg.color, std::vector<Rational>(color_count(cg), Rational(1))};
}

inline ColorFillWeight induced_fill_weight(const CharacterSet& cs, const ColoredGraph& cg) {
  for (const auto& w : cs.weights)
    if (!w.is_positive()) throw std::invalid_argument("character weights must be positive");
  std::vector<Rational> weight;
  weight.reserve(cs.characters.size());
  for (size_t c = 0; c < cs.characters.size(); c++) weight.push_back(cs.weight_of((int)c));
  return ColorFillWeight{cg.color, std::move(weight)};
}

inline Rational weight_of_fill(const ColorFillWeight& fw, const FillAssignment& fa) {
  Rational t(0);
  for (auto [u, v] : fa.edges) t += fw.at(u, v);
  return t;
}

// True when no fill edge joins two cells of one character.
inline bool is_proper_fill(const ColoredGraph& cg, const FillAssignment& fa) {
  for (auto [u, v] : fa.edges)
    if (cg.color[u] == cg.color[v]) return false;
  return true;
}

// Characters untouched by monochromatic fill edges; a triangulation of the
// partition intersection graph displays exactly these.
inline std::vector<int> displayed_characters(const ColoredGraph& cg, const FillAssignment& fa) {
  int colors = color_count(cg);
  std::vector<bool> broken(colors, false);
  for (auto [u, v] : fa.edges)
    if (cg.color[u] == cg.color[v]) broken[cg.color[u]] = true;
  std::vector<int> out;
  for (int c = 0; c < colors; c++)
    if (!broken[c]) out.push_back(c);
  return out;
}

// Restriction of a character set to a subset of its characters (weights kept
// when present).
inline CharacterSet restrict_characters(const CharacterSet& cs, const std::vector<int>& keep) {
  CharacterSet out;
  out.taxa = cs.taxa;
  for (int c : keep) {
    out.characters.push_back(cs.characters[c]);
    if (cs.has_weights()) out.weights.push_back(cs.weights[c]);
  }
  return out;
}

}  // namespace phylotri
