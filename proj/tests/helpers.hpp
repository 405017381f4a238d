#pragma once

#include <string>
#include <vector>

#include "bwcode/bitset.hpp"
#include "bwcode/rng.hpp"
#include "bwcode/word.hpp"

namespace bwcode::testing {

inline std::vector<DynamicBitset> to_bitsets(
    const std::vector<std::vector<bool>>& adjacency) {
  std::vector<DynamicBitset> rows(adjacency.size(),
                                  DynamicBitset(adjacency.size()));
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j = 0; j < adjacency.size(); ++j) {
      if (adjacency[i][j]) rows[i].set(j);
    }
  }
  return rows;
}

inline std::vector<std::vector<bool>> random_graph(RandomStream& rng,
                                                   std::size_t vertices,
                                                   std::uint64_t density_percent) {
  std::vector<std::vector<bool>> adjacency(vertices,
                                           std::vector<bool>(vertices, false));
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i + 1; j < vertices; ++j) {
      if (rng.next_below(100) < density_percent) {
        adjacency[i][j] = true;
        adjacency[j][i] = true;
      }
    }
  }
  return adjacency;
}

inline std::vector<std::vector<bool>> complete_graph(std::size_t vertices) {
  std::vector<std::vector<bool>> adjacency(vertices,
                                           std::vector<bool>(vertices, true));
  for (std::size_t i = 0; i < vertices; ++i) adjacency[i][i] = false;
  return adjacency;
}

// Distinct random words of the given length: a random code for d=1.
inline std::vector<Word> random_distinct_words(RandomStream& rng, int length,
                                               std::size_t count) {
  if (count > (std::uint64_t{1} << length)) {
    throw UsageError("asked for more distinct words than exist");
  }
  std::vector<Word> words;
  std::vector<bool> seen(std::size_t{1} << length, false);
  while (words.size() < count) {
    std::uint64_t bits = rng.next_below(std::uint64_t{1} << length);
    if (seen[bits]) continue;
    seen[bits] = true;
    words.emplace_back(length, bits);
  }
  return words;
}

}  // namespace bwcode::testing
