#pragma once

// End-to-end extraction: choose m = g (p^2 + p + 1), compress into Z_m, pick
// the covering block meeting the image most often, pull it back, certify.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sidon/compress.hpp"
#include "sidon/integer.hpp"
#include "sidon/random.hpp"
#include "sidon/singer.hpp"

namespace sidon {

struct ModulusChoice {
  std::uint64_t p = 0;
  std::uint64_t g = 1;
  std::uint64_t m = 0;  // g (p^2 + p + 1)
  Rational c = 3;
};

/// Smallest prime p with p^2 + p + 1 >= c n / g. Requires n >= 1, c > 1, g >= 1.
ModulusChoice choose_modulus(std::uint64_t n, const Rational& c = 3, std::uint64_t g = 1);

struct BlockChoice {
  std::size_t index = 0;
  std::size_t intersection = 0;
};

/// Block with the largest intersection with image (lowest index on ties).
/// The result always satisfies intersection >= ceil(|image| / #blocks) when the
/// blocks cover the modulus.
BlockChoice pigeonhole_block(std::span<const std::vector<std::uint64_t>> blocks,
                             std::span<const std::uint64_t> image, std::uint64_t modulus);

struct ExtractOptions {
  std::size_t trials = 200;
  unsigned g = 1;
  Rational c = 3;
  unsigned threads = 0;
  bool stop_at_target = false;
};

struct ExtractionReport {
  std::size_t n = 0;  // after deduplication
  std::size_t dedup_removed = 0;
  ModulusChoice modulus;
  Theta theta;
  std::size_t b_size = 0;
  std::size_t kept = 0;
  std::size_t collisions_removed = 0;
  std::size_t pair_collisions = 0;
  std::size_t trials_used = 0;
  std::size_t best_trial = 0;
  std::size_t block_count = 0;
  BlockChoice block;
  std::vector<Integer> subset;  // ascending
  double ratio = 0.0;           // |S| / sqrt(n), rounded to 6 places
  bool certified = false;
  unsigned g = 1;

  std::string certificate_kind() const;  // "sidon" or "b2g(g)"
};

/// Sidon pipeline; equals extract_b2g with g = 1.
ExtractionReport extract_sidon(std::span<const Integer> a, const ExtractOptions& opts,
                               const RandomStream& source);

/// B2[g] pipeline. Throws EmptyInput, or CertificationFailed on an internal bug.
ExtractionReport extract_b2g(std::span<const Integer> a, const ExtractOptions& opts,
                             const RandomStream& source);

double rounded_ratio(std::size_t size, std::size_t n);

}  // namespace sidon
