#pragma once

#include <cstdint>
#include <random>

#include "sidon/integer.hpp"

namespace sidon {

/// Seeded pseudo-random source.
///
/// A master seed plus a stream id fully determine the sequence, so work split
/// across threads stays reproducible: stream(seed, i) never depends on who
/// consumed stream(seed, j).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Independent child stream, keyed by (this stream's seed, id, child).
  RandomStream split(std::uint64_t child) const;

  std::uint64_t next_u64() { return engine_(); }
  u128 next_u128();
  /// Uniform in [0, bound); bound > 0. Rejection sampling, platform-stable.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi], inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi);
  /// Uniform integer in [0, 2^bits).
  Integer bits(unsigned nbits);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace sidon
