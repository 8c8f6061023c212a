#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "phylotri/characters.hpp"
#include "phylotri/graph.hpp"
#include "phylotri/phylogeny.hpp"
#include "phylotri/rational.hpp"

namespace phylotri {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace io_detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Names end up in Newick and DOT output, so the characters those formats
// use for structure are not allowed in them.
inline void check_name(const std::string& name, int line, const std::string& what) {
  if (name.empty()) throw ParseError(line, what + " name is empty");
  for (char c : name)
    if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':' || c == '+' || c == '"' ||
        c == '\'' || c == ' ' || c == '\t')
      throw ParseError(line, what + " name '" + name + "' contains forbidden character '" +
                                  std::string(1, c) + "'");
}

struct Line {
  int number;
  std::string text;
};

inline std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    number++;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({number, t});
  }
  return out;
}

}  // namespace io_detail

// Comma-separated matrix: a header line naming the characters (its first
// field is a placeholder for the taxon column), then one line per taxon.
// '?' marks a missing state, '#' starts a comment line.
inline CharacterSet parse_matrix(const std::string& text) {
  auto lines = io_detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "matrix is empty");

  auto header = io_detail::split_fields(lines[0].text);
  if (header.size() < 1 || header[0].empty())
    throw ParseError(lines[0].number, "header must start with a taxon column label");
  const int k = (int)header.size() - 1;
  CharacterSet cs;
  std::map<std::string, int> char_index;
  for (int j = 0; j < k; j++) {
    io_detail::check_name(header[j + 1], lines[0].number, "character");
    if (!char_index.emplace(header[j + 1], j).second)
      throw ParseError(lines[0].number, "duplicate character name '" + header[j + 1] + "'");
    cs.characters.push_back({header[j + 1], {}});
  }

  std::map<std::string, int> taxon_index;
  std::vector<std::map<std::string, int>> cell_of_symbol(k);
  for (size_t r = 1; r < lines.size(); r++) {
    auto fields = io_detail::split_fields(lines[r].text);
    if ((int)fields.size() != k + 1)
      throw ParseError(lines[r].number, "row has " + std::to_string(fields.size()) +
                                            " fields, expected " + std::to_string(k + 1));
    io_detail::check_name(fields[0], lines[r].number, "taxon");
    int x = (int)cs.taxa.size();
    if (!taxon_index.emplace(fields[0], x).second)
      throw ParseError(lines[r].number, "duplicate taxon '" + fields[0] + "'");
    cs.taxa.push_back(fields[0]);
    for (int j = 0; j < k; j++) {
      const std::string& f = fields[j + 1];
      if (f.empty())
        throw ParseError(lines[r].number, "empty state in column " + std::to_string(j + 2));
      if (f == "?") continue;
      auto [it, fresh] = cell_of_symbol[j].emplace(f, (int)cs.characters[j].cells.size());
      if (fresh) cs.characters[j].cells.push_back({});
      cs.characters[j].cells[it->second].push_back(x);
    }
  }
  if (cs.taxa.empty()) throw ParseError(lines[0].number, "matrix has no taxon rows");
  cs.validate();
  return cs;
}

// Inverse of parse_matrix, using each cell's index as its state symbol.
inline std::string emit_matrix(const CharacterSet& cs) {
  std::ostringstream out;
  out << "taxon";
  for (const auto& chi : cs.characters) out << "," << chi.name;
  out << "\n";
  std::vector<std::vector<std::string>> state(cs.taxa.size(),
                                              std::vector<std::string>(cs.characters.size(), "?"));
  for (size_t j = 0; j < cs.characters.size(); j++)
    for (size_t c = 0; c < cs.characters[j].cells.size(); c++)
      for (int x : cs.characters[j].cells[c]) state[x][j] = std::to_string(c);
  for (size_t x = 0; x < cs.taxa.size(); x++) {
    out << cs.taxa[x];
    for (const auto& s : state[x]) out << "," << s;
    out << "\n";
  }
  return out.str();
}

// Weight file: one 'name value' pair per line, values positive rationals
// ('3' or '5/2'). Characters not listed keep weight 1.
inline void parse_weights(const std::string& text, CharacterSet& cs) {
  std::map<std::string, int> char_index;
  for (size_t j = 0; j < cs.characters.size(); j++) char_index[cs.characters[j].name] = (int)j;
  cs.weights.assign(cs.characters.size(), Rational(1));
  std::vector<bool> seen(cs.characters.size(), false);
  for (const auto& line : io_detail::content_lines(text)) {
    std::istringstream in(line.text);
    std::string name, value, extra;
    if (!(in >> name >> value) || (in >> extra))
      throw ParseError(line.number, "expected 'name value'");
    auto it = char_index.find(name);
    if (it == char_index.end())
      throw ParseError(line.number, "unknown character '" + name + "'");
    if (seen[it->second]) throw ParseError(line.number, "duplicate weight for '" + name + "'");
    seen[it->second] = true;
    Rational w;
    try {
      w = Rational::parse(value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    if (!(w > Rational(0)))
      throw ParseError(line.number, "weight for '" + name + "' must be positive");
    cs.weights[it->second] = w;
  }
}

namespace io_detail {

inline std::string node_label(const XTree& t, const std::vector<std::string>& taxa, int u) {
  std::string out;
  for (int x : t.node_taxa[u]) {
    if (!out.empty()) out += "+";
    out += taxa[x];
  }
  return out;
}

inline std::string render_newick(const XTree& t, const std::vector<std::string>& taxa, int u,
                                 int parent) {
  std::vector<std::string> parts;
  for (int v : t.adj[u])
    if (v != parent) parts.push_back(render_newick(t, taxa, v, u));
  std::string label = node_label(t, taxa, u);
  if (parts.empty()) return label;
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); i++) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  out += label;
  return out;
}

}  // namespace io_detail

// Rooted rendering of the unrooted tree: root at the tree center (on a tie,
// the center with the smaller label, then the smaller id), sort each node's
// children by their rendered text, join co-located taxa with '+'.
inline std::string emit_newick(const XTree& t, const std::vector<std::string>& taxa) {
  const int n = t.node_count();
  std::vector<int> degree(n);
  for (int u = 0; u < n; u++) degree[u] = (int)t.adj[u].size();
  std::vector<bool> gone(n, false);
  std::vector<int> layer;
  int alive = n;
  for (int u = 0; u < n; u++)
    if (degree[u] <= 1) layer.push_back(u);
  while (alive > 2) {
    std::vector<int> next;
    for (int u : layer) {
      gone[u] = true;
      alive--;
      for (int v : t.adj[u])
        if (!gone[v] && --degree[v] == 1) next.push_back(v);
    }
    layer = next;
  }
  int center = -1;
  for (int u = 0; u < n; u++) {
    if (gone[u]) continue;
    if (center == -1) {
      center = u;
      continue;
    }
    std::string a = io_detail::node_label(t, taxa, u);
    std::string b = io_detail::node_label(t, taxa, center);
    if (a < b || (a == b && u < center)) center = u;
  }
  return io_detail::render_newick(t, taxa, center, -1) + ";";
}

// DOT rendering of the partition intersection graph, one fill color per
// character; when a fill assignment is given its edges are drawn dashed.
inline std::string emit_dot(const ColoredGraph& cg, const CharacterSet& cs,
                            const FillAssignment* fill = nullptr) {
  std::ostringstream out;
  out << "graph pig {\n  node [style=filled];\n";
  const int colors = color_count(cg);
  out.setf(std::ios::fixed);
  out.precision(3);
  for (int v = 0; v < cg.graph.n(); v++) {
    std::string cell_text;
    for (int x : cs.characters[cg.color[v]].cells[cg.cell[v]]) {
      if (!cell_text.empty()) cell_text += "+";
      cell_text += cs.taxa[x];
    }
    out << "  v" << v << " [label=\"" << cell_text << "@" << cs.characters[cg.color[v]].name
        << "\", fillcolor=\"" << (double)cg.color[v] / (double)std::max(colors, 1)
        << " 0.300 1.000\"];\n";
  }
  for (int u = 0; u < cg.graph.n(); u++)
    for (int v = u + 1; v < cg.graph.n(); v++)
      if (cg.graph.has_edge(u, v)) out << "  v" << u << " -- v" << v << ";\n";
  if (fill)
    for (auto [u, v] : fill->edges) out << "  v" << u << " -- v" << v << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

// Random matrix, byte-stable for a given seed: every (taxon, character)
// entry draws one word for the missing test and, when kept, one for the
// state, so the output is a pure function of the arguments.
inline std::string gen_matrix_csv(int taxa, int chars, int states, double missing,
                                  uint64_t seed) {
  if (taxa < 1 || chars < 1 || states < 1)
    throw std::invalid_argument("gen needs at least 1 taxon, 1 character, 1 state");
  if (missing < 0.0 || missing > 1.0)
    throw std::invalid_argument("missing fraction must be in [0, 1]");
  const uint64_t threshold = (uint64_t)llround(missing * 1000000.0);
  std::mt19937_64 rng(seed);
  int tw = (int)std::to_string(taxa).size();
  int cw = (int)std::to_string(chars).size();
  auto pad = [](int v, int w) {
    std::string s = std::to_string(v);
    while ((int)s.size() < w) s.insert(s.begin(), '0');
    return s;
  };
  std::ostringstream out;
  out << "taxon";
  for (int j = 1; j <= chars; j++) out << ",c" << pad(j, cw);
  out << "\n";
  for (int i = 1; i <= taxa; i++) {
    out << "t" << pad(i, tw);
    for (int j = 0; j < chars; j++) {
      if (rng() % 1000000 < threshold)
        out << ",?";
      else
        out << "," << rng() % (uint64_t)states;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace phylotri
