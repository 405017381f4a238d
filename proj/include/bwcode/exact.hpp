#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "bwcode/bitset.hpp"
#include "bwcode/graph.hpp"

namespace bwcode {

struct ExactConfig {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  // Greedy-coloring upper bound at each search node. Off by default; the
  // plain candidate-count bound is the reference behavior.
  bool use_color_bound = false;
  // Test hook. Turning this off disables all bounding, so the search walks
  // the full clique tree.
  bool prune = true;
  // Test hook, called with each new incumbent size.
  std::function<void(std::size_t)> on_incumbent;
};

struct ExactResult {
  std::vector<std::size_t> clique;  // ascending vertex indices
  bool proven_optimal = true;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;

  std::size_t size() const { return clique.size(); }
};

namespace detail {

// Branch and bound maximum clique. Vertices are permuted once up front by
// non-increasing degree (ties to the lower index); candidate sets are bitsets
// in that permuted space, so extending by a vertex is one row intersection.
class CliqueSearch {
 public:
  CliqueSearch(std::span<const DynamicBitset> adjacency,
               const DynamicBitset* allowed, const ExactConfig& config)
      : adjacency_(adjacency), config_(config) {
    if (allowed) {
      active_ = allowed->to_vector();
    } else {
      active_.resize(adjacency.size());
      std::iota(active_.begin(), active_.end(), std::size_t{0});
    }
    std::vector<std::size_t> degree(active_.size());
    for (std::size_t i = 0; i < active_.size(); ++i) {
      degree[i] = allowed ? adjacency_[active_[i]].intersection_count(*allowed)
                          : adjacency_[active_[i]].count();
    }
    order_.resize(active_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return active_[a] < active_[b];
    });
    std::size_t k = order_.size();
    padj_.assign(k, DynamicBitset(k));
    for (std::size_t i = 0; i < k; ++i) {
      const DynamicBitset& row = adjacency_[active_[order_[i]]];
      for (std::size_t j = i + 1; j < k; ++j) {
        if (row.test(active_[order_[j]])) {
          padj_[i].set(j);
          padj_[j].set(i);
        }
      }
    }
  }

  ExactResult run() {
    auto start = std::chrono::steady_clock::now();
    if (config_.time_limit_seconds) {
      deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*config_.time_limit_seconds));
    }
    std::size_t k = order_.size();
    cur_.resize(k);
    if (k > 0) {
      DynamicBitset all(k, true);
      expand(all, k, 0);
    }
    ExactResult result;
    result.clique.reserve(best_.size());
    for (std::size_t i : best_) result.clique.push_back(active_[order_[i]]);
    std::sort(result.clique.begin(), result.clique.end());
    result.proven_optimal = !truncated_;
    result.nodes_explored = nodes_;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

 private:
  // Returns false when the budget ran out and unwinding should stop.
  bool expand(DynamicBitset& candidates, std::size_t ccount, std::size_t depth) {
    if (config_.prune && config_.use_color_bound &&
        depth + color_bound(candidates) <= best_.size()) {
      return true;
    }
    while (ccount > 0) {
      if (config_.prune && depth + ccount <= best_.size()) return true;
      std::size_t v = candidates.find_first();
      candidates.reset(v);
      --ccount;
      ++nodes_;
      if (!within_budget()) return false;
      cur_[depth] = v;
      if (depth + 1 > best_.size()) {
        best_.assign(cur_.begin(), cur_.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
        if (config_.on_incumbent) config_.on_incumbent(best_.size());
      }
      // deque: growing it must not invalidate references held by outer frames
      while (buffers_.size() <= depth) buffers_.emplace_back(order_.size());
      DynamicBitset& next = buffers_[depth];
      std::size_t ncount = intersect_into(candidates, padj_[v], next);
      if (ncount > 0) {
        if (!config_.prune || depth + 1 + ncount > best_.size()) {
          if (!expand(next, ncount, depth + 1)) return false;
        }
      }
    }
    return true;
  }

  bool within_budget() {
    if (config_.node_limit && nodes_ >= *config_.node_limit) {
      truncated_ = true;
      return false;
    }
    if (deadline_ && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() >= *deadline_) {
      truncated_ = true;
      return false;
    }
    return true;
  }

  // Number of greedy color classes covering the candidate set; an upper
  // bound on any clique inside it.
  std::size_t color_bound(const DynamicBitset& candidates) {
    if (uncolored_.size() != order_.size()) {
      uncolored_ = DynamicBitset(order_.size());
      class_pool_ = DynamicBitset(order_.size());
    }
    uncolored_ = candidates;
    std::size_t classes = 0;
    while (uncolored_.any()) {
      ++classes;
      class_pool_ = uncolored_;
      while (class_pool_.any()) {
        std::size_t v = class_pool_.find_first();
        uncolored_.reset(v);
        class_pool_.reset(v);
        class_pool_ -= padj_[v];
      }
    }
    return classes;
  }

  std::span<const DynamicBitset> adjacency_;
  const ExactConfig& config_;
  std::vector<std::size_t> active_;  // original ids of the vertices in play
  std::vector<std::size_t> order_;   // permuted position -> index into active_
  std::vector<DynamicBitset> padj_;  // adjacency in permuted space
  std::deque<DynamicBitset> buffers_;
  std::vector<std::size_t> cur_;
  std::vector<std::size_t> best_;
  DynamicBitset uncolored_;
  DynamicBitset class_pool_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace detail

inline ExactResult max_clique_exact(std::span<const DynamicBitset> adjacency,
                                    const ExactConfig& config = {}) {
  return detail::CliqueSearch(adjacency, nullptr, config).run();
}

// Search restricted to the vertices set in `allowed`.
inline ExactResult max_clique_exact_induced(std::span<const DynamicBitset> adjacency,
                                            const DynamicBitset& allowed,
                                            const ExactConfig& config = {}) {
  return detail::CliqueSearch(adjacency, &allowed, config).run();
}

inline ExactResult max_clique_exact(const CompatibilityGraph& graph,
                                    const ExactConfig& config = {}) {
  return max_clique_exact(std::span<const DynamicBitset>(graph.adjacency()), config);
}

}  // namespace bwcode
