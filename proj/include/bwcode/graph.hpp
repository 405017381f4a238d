#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bwcode/bitset.hpp"
#include "bwcode/errors.hpp"
#include "bwcode/word.hpp"

namespace bwcode {

// Compatibility graph of a search instance: one vertex per admissible word,
// an edge whenever two words are at Hamming distance >= d. Cliques are
// exactly the codes for the instance.
class CompatibilityGraph {
 public:
  CompatibilityGraph(CodeParams params, std::vector<Word> vertices,
                     std::vector<DynamicBitset> adjacency)
      : params_(params),
        vertices_(std::move(vertices)),
        adjacency_(std::move(adjacency)) {}

  const CodeParams& params() const { return params_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Word>& vertices() const { return vertices_; }

  const Word& vertex(std::size_t u) const {
    check_index(u);
    return vertices_[u];
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    check_index(u);
    check_index(v);
    return adjacency_[u].test(v);
  }

  const DynamicBitset& neighbors(std::size_t u) const {
    check_index(u);
    return adjacency_[u];
  }

  const std::vector<DynamicBitset>& adjacency() const { return adjacency_; }

  std::size_t degree(std::size_t u) const {
    check_index(u);
    return adjacency_[u].count();
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.count();
    return twice / 2;
  }

 private:
  void check_index(std::size_t u) const {
    if (u >= vertices_.size()) {
      throw UsageError("vertex index " + std::to_string(u) +
                       " out of range for graph with " +
                       std::to_string(vertices_.size()) + " vertices");
    }
  }

  CodeParams params_;
  std::vector<Word> vertices_;
  std::vector<DynamicBitset> adjacency_;
};

inline CompatibilityGraph build_graph(const CodeParams& params,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Word> vertices = enumerate_words(params, cap);
  std::size_t count = vertices.size();
  std::vector<DynamicBitset> adjacency(count, DynamicBitset(count));
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (hamming_distance(vertices[u], vertices[v]) >= params.d) {
        adjacency[u].set(v);
        adjacency[v].set(u);
      }
    }
  }
  return CompatibilityGraph(params, std::move(vertices), std::move(adjacency));
}

// DIMACS ascii clique format: a problem line, then one line per edge with
// 1-based endpoints, smaller first.
inline void export_dimacs(const CompatibilityGraph& graph, std::ostream& out) {
  out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    graph.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    });
  }
  if (!out) throw IoError("failed writing DIMACS output");
}

// True iff the vertex set is pairwise adjacent (equivalently, the listed
// words form a code for the instance). Repeated indices are rejected.
inline bool clique_is_code(const CompatibilityGraph& graph,
                           std::span<const std::size_t> vertex_set) {
  for (std::size_t i = 0; i < vertex_set.size(); ++i) {
    for (std::size_t j = i + 1; j < vertex_set.size(); ++j) {
      if (vertex_set[i] == vertex_set[j]) {
        throw UsageError("vertex " + std::to_string(vertex_set[i]) +
                         " listed twice");
      }
      if (!graph.adjacent(vertex_set[i], vertex_set[j])) return false;
    }
  }
  return true;
}

}  // namespace bwcode
