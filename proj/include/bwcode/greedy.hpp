#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "bwcode/bitset.hpp"
#include "bwcode/errors.hpp"
#include "bwcode/exact.hpp"
#include "bwcode/graph.hpp"
#include "bwcode/rng.hpp"

namespace bwcode {

struct GreedyConfig {
  // Fraction of the original vertex count sampled at each selection step.
  double sample_fraction = 0.1;
  // Once the available set is this small, finish with the exact solver.
  std::size_t exact_threshold = 100;
  std::size_t restarts = 1000;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;  // 0 = one per hardware thread

  void validate() const {
    if (!(sample_fraction > 0.0) || sample_fraction > 1.0) {
      throw UsageError("sample fraction must lie in (0, 1]");
    }
    if (exact_threshold < 1) throw UsageError("exact threshold must be at least 1");
    if (restarts < 1) throw UsageError("restart count must be at least 1");
  }
};

struct GreedyResult {
  std::vector<std::size_t> clique;  // ascending vertex indices
  std::size_t best_restart_index = 0;
  double elapsed_seconds = 0.0;

  std::size_t size() const { return clique.size(); }
};

// One restart: repeatedly sample a few available vertices, keep the one with
// the most neighbors still available (ties to the lower index), eliminate its
// non-neighbors, and hand the small remainder to the exact solver. The
// sample size is fixed from the original vertex count, not the shrinking
// available set. Every draw comes from a stream keyed by (master seed,
// restart index), so the result depends only on those two numbers.
inline std::vector<std::size_t> greedy_once(
    std::span<const DynamicBitset> adjacency, const GreedyConfig& config,
    std::size_t restart_index,
    const std::function<void(std::size_t, const DynamicBitset&)>& on_select = {}) {
  config.validate();
  std::size_t vertex_count = adjacency.size();
  if (vertex_count == 0) return {};
  RandomStream rng(config.master_seed, restart_index);
  auto sample_size = static_cast<std::size_t>(std::max<long long>(
      1, std::llround(config.sample_fraction * static_cast<double>(vertex_count))));

  DynamicBitset available(vertex_count, true);
  std::size_t available_count = vertex_count;
  std::vector<std::size_t> clique;
  std::vector<std::size_t> pool;
  while (available_count > config.exact_threshold) {
    pool = available.to_vector();
    std::size_t draw = std::min(sample_size, pool.size());
    for (std::size_t i = 0; i < draw; ++i) {
      std::size_t j = i + rng.next_below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    std::size_t chosen = DynamicBitset::npos;
    std::size_t chosen_degree = 0;
    for (std::size_t i = 0; i < draw; ++i) {
      std::size_t v = pool[i];
      std::size_t degree = adjacency[v].intersection_count(available);
      if (chosen == DynamicBitset::npos || degree > chosen_degree ||
          (degree == chosen_degree && v < chosen)) {
        chosen = v;
        chosen_degree = degree;
      }
    }
    clique.push_back(chosen);
    available &= adjacency[chosen];  // drops the chosen vertex and its non-neighbors
    available_count = available.count();
    if (on_select) on_select(chosen, available);
  }
  if (available_count > 0) {
    ExactResult finish = max_clique_exact_induced(adjacency, available);
    clique.insert(clique.end(), finish.clique.begin(), finish.clique.end());
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

inline std::vector<std::size_t> greedy_once(
    const CompatibilityGraph& graph, const GreedyConfig& config,
    std::size_t restart_index,
    const std::function<void(std::size_t, const DynamicBitset&)>& on_select = {}) {
  return greedy_once(std::span<const DynamicBitset>(graph.adjacency()), config,
                     restart_index, on_select);
}

// All restarts, reduced to a single winner: larger clique first, then
// lexicographically smaller sorted vertex list, then lower restart index.
// The reduction ignores completion order, so any thread count gives the
// same answer.
inline GreedyResult greedy_restarts(std::span<const DynamicBitset> adjacency,
                                    const GreedyConfig& config) {
  config.validate();
  auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<std::size_t>> outcomes(config.restarts);

  unsigned threads = config.threads != 0 ? config.threads
                                         : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, config.restarts));
  if (threads <= 1) {
    for (std::size_t i = 0; i < config.restarts; ++i) {
      outcomes[i] = greedy_once(adjacency, config, i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next.fetch_add(1); i < config.restarts;
           i = next.fetch_add(1)) {
        outcomes[i] = greedy_once(adjacency, config, i);
      }
    };
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(worker);
    for (auto& t : workers) t.join();
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    const auto& candidate = outcomes[i];
    const auto& incumbent = outcomes[best];
    if (candidate.size() > incumbent.size() ||
        (candidate.size() == incumbent.size() && candidate < incumbent)) {
      best = i;
    }
  }
  GreedyResult result;
  result.clique = std::move(outcomes[best]);
  result.best_restart_index = best;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline GreedyResult greedy_restarts(const CompatibilityGraph& graph,
                                    const GreedyConfig& config) {
  return greedy_restarts(std::span<const DynamicBitset>(graph.adjacency()), config);
}

}  // namespace bwcode
