#include <fstream>
#include <string>
#include <vector>

#include "bwcode/exact.hpp"
#include "bwcode/graph.hpp"
#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace bwcode;
using bwcode::testing::complete_graph;
using bwcode::testing::to_bitsets;

TEST_CASE("oracle clique sizes on tiny known graphs") {
  CHECK(oracle::brute_force_max_clique(
            std::vector<std::vector<bool>>(5, std::vector<bool>(5, false)))
            .size() == 1);
  CHECK(oracle::brute_force_max_clique(complete_graph(5)).size() == 5);

  // five-cycle: largest clique is an edge
  std::vector<std::vector<bool>> cycle(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i) {
    cycle[i][(i + 1) % 5] = true;
    cycle[(i + 1) % 5][i] = true;
  }
  CHECK(oracle::brute_force_max_clique(cycle).size() == 2);

  // K4 minus one edge
  auto near_k4 = complete_graph(4);
  near_k4[0][1] = near_k4[1][0] = false;
  CHECK(oracle::brute_force_max_clique(near_k4).size() == 3);
}

TEST_CASE("oracle rejects oversized graphs") {
  CHECK_THROWS_AS(oracle::brute_force_max_clique(complete_graph(26)),
                  CapacityError);
}

TEST_CASE("oracle agrees with the solver on a word graph prefix") {
  CompatibilityGraph graph = build_graph({6, 4, 6, WeightMode::bounded});
  // restrict both to the first 20 vertices
  DynamicBitset allowed(graph.vertex_count());
  for (std::size_t v = 0; v < 20; ++v) allowed.set(v);
  std::vector<std::string> words;
  for (std::size_t v = 0; v < 20; ++v) words.push_back(graph.vertex(v).render());
  auto matrix = oracle::adjacency_from_words(words, graph.params().d);
  ExactResult viaSolver = max_clique_exact_induced(
      std::span<const DynamicBitset>(graph.adjacency()), allowed);
  CHECK(viaSolver.size() == oracle::brute_force_max_clique(matrix).size());
}

TEST_CASE("oracle min distance on known word sets") {
  CHECK(oracle::brute_force_min_distance({"0110100", "1001011"}).distance == 7);
  auto witness = oracle::brute_force_min_distance(
      {"000111", "000110", "111000"});
  CHECK(witness.distance == 1);
  CHECK(witness.first == 0);
  CHECK(witness.second == 1);
  CHECK_THROWS_AS(oracle::brute_force_min_distance({"0101"}), UsageError);
}

TEST_CASE("oracle min distance on a shipped listing") {
  std::ifstream in(std::string(BWCODE_DATA_DIR) + "/codes/A_10_8_5.txt");
  REQUIRE(in.good());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() != '#') words.push_back(line);
  }
  REQUIRE(words.size() == 2);
  CHECK(oracle::brute_force_min_distance(words).distance == 8);
}

TEST_CASE("char distance requires equal lengths") {
  CHECK_THROWS_AS(oracle::char_distance("01", "011"), UsageError);
  CHECK(oracle::char_distance("0101", "0110") == 2);
}
