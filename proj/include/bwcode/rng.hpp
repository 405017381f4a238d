#pragma once

#include <cstdint>

namespace bwcode {

// Counter-based stream keyed by (master seed, stream index). Every restart of
// the randomized search owns its own stream, so results do not depend on how
// restarts are scheduled across threads. The mixer is the SplitMix64
// finalizer, which is plenty for sampling work.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : base_(mix(master_seed ^ 0x9e3779b97f4a7c15ull) ^
              mix(stream_index + 0xbf58476d1ce4e5b9ull)) {}

  std::uint64_t next() {
    counter_ += 0x9e3779b97f4a7c15ull;
    return mix(base_ + counter_);
  }

  // Uniform draw from [0, bound); bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace bwcode
