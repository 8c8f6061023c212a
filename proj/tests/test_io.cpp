#include <catch2/catch_amalgamated.hpp>

#include "phylotri/io.hpp"
#include "testutil.hpp"

using namespace phylotri;

static const char* kHubMatrix =
    "# twelve taxa, one four-cell and two three-cell characters\n"
    "taxon,c1,c2,c3\n"
    "a,0,0,?\n"
    "b,0,?,0\n"
    "c,0,?,1\n"
    "d,0,1,?\n"
    "e,0,?,2\n"
    "f,0,2,?\n"
    "g,1,0,?\n"
    "h,1,?,0\n"
    "i,2,?,1\n"
    "j,2,1,?\n"
    "k,3,?,2\n"
    "l,3,2,?\n";

TEST_CASE("matrix parsing") {
  CharacterSet cs = parse_matrix(kHubMatrix);
  CHECK(cs.taxa.size() == 12);
  CHECK(cs.characters.size() == 3);
  CharacterSet expected = testutil::hub_three_cycles_compatible();
  for (size_t c = 0; c < 3; c++) {
    CHECK(cs.characters[c].name == expected.characters[c].name);
    CHECK(cs.characters[c].cells == expected.characters[c].cells);
  }
}

TEST_CASE("matrix parsing tolerates blanks and spacing") {
  CharacterSet cs = parse_matrix("\n# comment\n taxon , c1 \n\n a , 0 \n b,1\r\n");
  CHECK(cs.taxa == std::vector<std::string>{"a", "b"});
  REQUIRE(cs.characters.size() == 1);
  CHECK(cs.characters[0].cells == std::vector<VertexSet>{{0}, {1}});
}

TEST_CASE("matrix parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);                                     // empty matrix
  CHECK(line_of("taxon,c1\n") == 1);                           // no rows
  CHECK(line_of("taxon,c1\na,0\na,1\n") == 3);                 // duplicate taxon
  CHECK(line_of("taxon,c1,c1\na,0,1\n") == 1);                 // duplicate character
  CHECK(line_of("taxon,c1\na,0,1\n") == 2);                    // ragged row
  CHECK(line_of("taxon,c1\na,\n") == 2);                       // empty state
  CHECK(line_of("taxon,c1\n,0\n") == 2);                       // empty taxon
  CHECK(line_of("taxon,c1\na+b,0\n") == 2);                    // forbidden name
  CHECK(line_of("# c\n# c\ntaxon,c(1\na,0\n") == 3);           // forbidden char name
}

TEST_CASE("matrix round trip") {
  CharacterSet cs = parse_matrix(kHubMatrix);
  CharacterSet again = parse_matrix(emit_matrix(cs));
  CHECK(again.taxa == cs.taxa);
  REQUIRE(again.characters.size() == cs.characters.size());
  for (size_t c = 0; c < cs.characters.size(); c++) {
    CHECK(again.characters[c].name == cs.characters[c].name);
    CHECK(again.characters[c].cells == cs.characters[c].cells);
  }
}

TEST_CASE("weight parsing") {
  CharacterSet cs = parse_matrix(kHubMatrix);
  parse_weights("# weights\nc1 2\nc3 5/2\n", cs);
  REQUIRE(cs.weights.size() == 3);
  CHECK(cs.weights[0] == Rational(2));
  CHECK(cs.weights[1] == Rational(1));  // default
  CHECK(cs.weights[2] == Rational(5, 2));

  CHECK_THROWS_AS([&] { parse_weights("cX 1\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1 0\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1 -2\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1 x\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1 1 2\n", cs); }(), ParseError);
  CHECK_THROWS_AS([&] { parse_weights("c1 1\nc1 2\n", cs); }(), ParseError);
}

TEST_CASE("newick rendering of a labeled path") {
  XTree t;
  t.adj = {{1}, {0, 2}, {1}};
  t.node_taxa = {{0}, {1}, {2}};
  t.phi = {0, 1, 2};
  CHECK(emit_newick(t, {"a", "b", "c"}) == "(a,c)b;");
}

TEST_CASE("newick rendering sorts children and joins labels") {
  XTree t;
  t.adj = {{1, 2, 3}, {0}, {0}, {0}};
  t.node_taxa = {{}, {2, 3}, {1}, {0}};
  t.phi = {3, 2, 1, 1};
  // Center is the hub; children sorted by rendered text.
  CHECK(emit_newick(t, {"a", "b", "c", "d"}) == "(a,b,c+d);");
}

TEST_CASE("newick degenerate trees") {
  XTree single;
  single.adj = {{}};
  single.node_taxa = {{0, 1}};
  single.phi = {0, 0};
  CHECK(emit_newick(single, {"x", "y"}) == "x+y;");

  XTree edge;
  edge.adj = {{1}, {0}};
  edge.node_taxa = {{0}, {1}};
  edge.phi = {0, 1};
  CHECK(emit_newick(edge, {"b", "a"}) == "(b)a;");
}

TEST_CASE("dot export shows cells, colors, and witness fill") {
  CharacterSet cs = testutil::crossing_pair();
  ColoredGraph cg = build_pig(cs);
  std::string plain = emit_dot(cg, cs);
  CHECK(plain.find("v0 [label=\"a+b@c1\"") != std::string::npos);
  CHECK(plain.find("v2 [label=\"a+c@c2\"") != std::string::npos);
  CHECK(plain.find("v0 -- v2;") != std::string::npos);
  CHECK(plain.find("dashed") == std::string::npos);

  FillAssignment fa;
  fa.add(0, 1);
  std::string with = emit_dot(cg, cs, &fa);
  CHECK(with.find("v0 -- v1 [style=dashed];") != std::string::npos);
}

TEST_CASE("generator output is stable and parseable") {
  std::string a = gen_matrix_csv(8, 5, 3, 0.25, 42);
  std::string b = gen_matrix_csv(8, 5, 3, 0.25, 42);
  CHECK(a == b);
  CHECK(a != gen_matrix_csv(8, 5, 3, 0.25, 43));

  CharacterSet cs = parse_matrix(a);
  CHECK(cs.taxa.size() == 8);
  CHECK(cs.characters.size() == 5);
  CHECK(cs.taxa[0] == "t1");

  // Extremes: all present, all missing.
  CharacterSet full = parse_matrix(gen_matrix_csv(4, 3, 2, 0.0, 1));
  for (const auto& chi : full.characters) {
    size_t placed = 0;
    for (const auto& cell : chi.cells) placed += cell.size();
    CHECK(placed == 4);
  }
  CharacterSet none = parse_matrix(gen_matrix_csv(4, 3, 2, 1.0, 1));
  for (const auto& chi : none.characters) CHECK(chi.cells.empty());

  CHECK_THROWS_AS(gen_matrix_csv(0, 3, 2, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_matrix_csv(4, 3, 2, 1.5, 1), std::invalid_argument);
}
