// Command-line front end: perfect phylogeny, weighted maximum compatibility,
// uniqueness verdicts, instance statistics, matrix generation, and DOT export
// of the partition intersection graph.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "phylotri/characters.hpp"
#include "phylotri/io.hpp"
#include "phylotri/oracle.hpp"
#include "phylotri/phylogeny.hpp"
#include "phylotri/triangulation_dp.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

phylotri::CharacterSet load(const std::string& matrix_path, const std::string& weights_path) {
  phylotri::CharacterSet cs = phylotri::parse_matrix(read_input(matrix_path));
  if (!weights_path.empty()) phylotri::parse_weights(read_input(weights_path), cs);
  return cs;
}

int run_solve(const std::string& matrix_path) {
  phylotri::CharacterSet cs = load(matrix_path, "");
  auto tree = phylotri::solve_perfect_phylogeny(cs);
  if (!tree) {
    std::cout << "INCOMPATIBLE\n";
    return 1;
  }
  std::cout << phylotri::emit_newick(*tree, cs.taxa) << "\n";
  return 0;
}

int run_maxcompat(const std::string& matrix_path, const std::string& weights_path) {
  phylotri::CharacterSet cs = load(matrix_path, weights_path);
  phylotri::MaxCompatResult res = phylotri::solve_max_compat_two_state(cs);
  std::cout << "weight " << res.weight.str() << "\n";
  std::cout << "kept";
  for (int c : res.kept) std::cout << " " << cs.characters[c].name;
  std::cout << "\n";
  std::cout << phylotri::emit_newick(res.tree, cs.taxa) << "\n";
  return 0;
}

int run_unique(const std::string& matrix_path) {
  phylotri::CharacterSet cs = load(matrix_path, "");
  phylotri::UniquePpResult res = phylotri::solve_unique_pp(cs);
  std::cout << phylotri::verdict_name(res.verdict) << "\n";
  if (res.verdict == phylotri::UniqueVerdict::Unique)
    std::cout << phylotri::emit_newick(*res.tree, cs.taxa) << "\n";
  return res.verdict == phylotri::UniqueVerdict::Unique ? 0 : 1;
}

int run_stats(const std::string& matrix_path, const std::string& weights_path, bool oracle) {
  phylotri::CharacterSet cs = load(matrix_path, weights_path);
  phylotri::ColoredGraph cg = phylotri::build_pig(cs);
  auto start = std::chrono::steady_clock::now();
  phylotri::MfiResult ind = phylotri::minimum_fill(cg.graph, phylotri::indicator_weight(cg));
  phylotri::MfiResult wtd =
      phylotri::minimum_fill(cg.graph, phylotri::induced_fill_weight(cs, cg));
  auto stop = std::chrono::steady_clock::now();
  long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  std::cout << "n " << cg.graph.n() << "\n";
  std::cout << "m " << cg.graph.m() << "\n";
  std::cout << "components " << cg.graph.components().size() << "\n";
  std::cout << "minsep_count " << wtd.minsep_count << "\n";
  std::cout << "pmc_count " << wtd.pmc_count << "\n";
  std::cout << "pmc_bound_ok 1\n";  // the solver aborts when the bound fails
  std::cout << "mfi_indicator " << ind.value.str() << "\n";
  std::cout << "mfi_weighted " << wtd.value.str() << "\n";
  std::cout << "delta_min_count " << wtd.delta_min.size() << "\n";
  std::cout << "wall_ms " << ms << "\n";
  if (oracle) {
    phylotri::OracleCaps caps = phylotri::oracle_caps();
    phylotri::Rational brute = phylotri::brute_mfi(cg.graph, phylotri::indicator_weight(cg), caps);
    std::cout << "oracle_mfi_indicator " << brute.str() << "\n";
    std::cout << "oracle_agrees " << (brute == ind.value ? 1 : 0) << "\n";
    if (brute != ind.value) return 1;
  }
  return 0;
}

int run_gen(int taxa, int chars, int states, double missing, uint64_t seed) {
  std::cout << phylotri::gen_matrix_csv(taxa, chars, states, missing, seed);
  return 0;
}

int run_pig(const std::string& matrix_path, const std::string& weights_path, bool witness) {
  phylotri::CharacterSet cs = load(matrix_path, weights_path);
  phylotri::ColoredGraph cg = phylotri::build_pig(cs);
  if (!witness) {
    std::cout << phylotri::emit_dot(cg, cs);
    return 0;
  }
  phylotri::MfiResult res =
      phylotri::minimum_fill(cg.graph, phylotri::induced_fill_weight(cs, cg));
  std::cout << phylotri::emit_dot(cg, cs, &res.witness);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact perfect phylogeny and character compatibility solver"};
  app.require_subcommand(1);

  std::string matrix_path, weights_path;
  bool oracle = false, witness = false;
  int taxa = 0, chars = 0, states = 2;
  double missing = 0.0;
  uint64_t seed = 1;

  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("matrix", matrix_path, "character matrix CSV ('-' for stdin)")->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "find a perfect phylogeny or report INCOMPATIBLE");
  add_matrix(solve);

  CLI::App* maxcompat =
      app.add_subcommand("maxcompat", "maximum-weight compatible subset of two-state characters");
  add_matrix(maxcompat);
  maxcompat->add_option("--weights", weights_path, "weight file ('name value' lines)");

  CLI::App* unique = app.add_subcommand("unique", "decide whether the perfect phylogeny is unique");
  add_matrix(unique);

  CLI::App* stats = app.add_subcommand("stats", "instance and solver statistics as 'key value'");
  add_matrix(stats);
  stats->add_option("--weights", weights_path, "weight file ('name value' lines)");
  stats->add_flag("--oracle", oracle, "cross-check against the exhaustive reference solver");

  CLI::App* gen = app.add_subcommand("gen", "write a pseudorandom character matrix to stdout");
  gen->add_option("--taxa", taxa, "number of taxa")->required();
  gen->add_option("--chars", chars, "number of characters")->required();
  gen->add_option("--states", states, "states per character (default 2)");
  gen->add_option("--missing", missing, "missing-entry probability (default 0)");
  gen->add_option("--seed", seed, "generator seed (default 1)");

  CLI::App* pig = app.add_subcommand("pig", "partition intersection graph as DOT");
  add_matrix(pig);
  pig->add_option("--weights", weights_path, "weight file ('name value' lines)");
  pig->add_flag("--witness", witness, "draw a minimum-weight fill dashed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(matrix_path);
    if (maxcompat->parsed()) return run_maxcompat(matrix_path, weights_path);
    if (unique->parsed()) return run_unique(matrix_path);
    if (stats->parsed()) return run_stats(matrix_path, weights_path, oracle);
    if (gen->parsed()) return run_gen(taxa, chars, states, missing, seed);
    if (pig->parsed()) return run_pig(matrix_path, weights_path, witness);
  } catch (const phylotri::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
