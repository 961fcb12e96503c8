#pragma once

// Compression of a finite integer set into Z_m through a Freiman morphism:
// keep B = { a : frac(a m theta) < 1/k }, map a -> floor(a m theta) mod m, and
// drop all but the smallest element of every fiber so the map is injective.

#include <cstdint>
#include <span>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/random.hpp"
#include "sidon/theta.hpp"

namespace sidon {

struct TrialStats {
  std::size_t b_size = 0;           // |B_theta|
  std::size_t kept = 0;             // |C_theta| = number of non-empty fibers
  std::size_t pair_collisions = 0;  // P_theta = sum over fibers of C(r, 2)
};

struct CompressionResult {
  Theta theta;
  std::uint64_t m = 0;
  unsigned k = 2;
  std::size_t b_size = 0;
  std::vector<Integer> kept;          // ascending
  std::vector<std::uint64_t> image;   // image[i] = phi(kept[i])
  std::size_t collisions_removed = 0; // b_size - kept.size()
  std::size_t pair_collisions = 0;
  std::size_t trials_used = 0;
  std::size_t best_trial = 0;
  std::vector<TrialStats> trials;     // one entry per evaluated trial
};

struct CompressOptions {
  std::size_t trials = 200;
  unsigned k = 2;
  unsigned threads = 0;         // 0: std::thread::hardware_concurrency()
  bool stop_at_target = false;  // return the first trial reaching the bound
  bool certify = true;          // re-run the morphism certifier on the output
};

/// floor(n/2 - n^2/(2m)), clamped at 0.
std::size_t averaging_target(std::size_t n, std::uint64_t m);

/// Best of opts.trials sampled thetas; trial t draws theta from source.split(t).
/// Ties go to the lowest trial index. a must be a non-empty set (duplicates
/// throw InvalidParams); m in [2, 2^32).
CompressionResult compress(std::span<const Integer> a, std::uint64_t m,
                           const CompressOptions& opts, const RandomStream& source);

/// compress with threshold 1/k. Throws InvalidOrder when k < 2.
CompressionResult compress_k(std::span<const Integer> a, std::uint64_t m, unsigned k,
                             CompressOptions opts, const RandomStream& source);

/// A single, caller-chosen theta. Dyadic thetas with m < 2^32 go through the
/// fixed-point kernels; everything else through exact GMP arithmetic
/// (force_exact selects the latter unconditionally).
CompressionResult compress_at(std::span<const Integer> a, std::uint64_t m,
                              const Theta& theta, unsigned k = 2,
                              bool force_exact = false);

}  // namespace sidon
