#pragma once

// Certifiers for every claim the pipeline makes. A verdict is either empty
// (accepted) or a Witness that reproduces the violation on its own.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/theta.hpp"

namespace sidon {

enum class WitnessKind {
  sidon_violation,
  b2g_violation,
  morphism_violation,
  cover_gap,
  difference_defect,
};

std::string_view witness_kind_name(WitnessKind kind) noexcept;

struct Witness {
  WitnessKind kind{};
  /// sidon: x, y, z, t with x + y = z + t and {x, y} != {z, t}.
  /// morphism: the offending tuple of kept elements.
  /// cover_gap: the smallest uncovered residue.
  /// difference_defect: d1, d2, d3, d4 with d1 - d2 = d3 - d4, or a single
  /// nonzero residue that never arises as a difference.
  std::vector<Integer> elements;
  /// b2g: the over-represented sum and g + 1 of its pairs.
  Integer value;
  std::vector<std::pair<Integer, Integer>> pairs;
  std::string note;

  std::string describe() const;
};

using Verdict = std::optional<Witness>;

/// All unordered pair sums, doubles a + a included, are distinct. Over Z when
/// modulus is empty, otherwise in Z_modulus (values must be residues).
/// Throws InvalidParams on repeated elements.
Verdict is_sidon(std::span<const Integer> set,
                 const std::optional<Integer>& modulus = std::nullopt);
Verdict is_sidon_mod(std::span<const std::uint64_t> residues, std::uint64_t modulus);

/// Every sum has at most g unordered representations {x, y}, x = y allowed.
Verdict is_b2g(std::span<const Integer> set, unsigned g,
               const std::optional<Integer>& modulus = std::nullopt);
Verdict is_b2g_mod(std::span<const std::uint64_t> residues, unsigned g,
                   std::uint64_t modulus);

/// Re-evaluates a sidon or b2g witness against the relation it claims.
bool witness_holds(const Witness& w, unsigned g,
                   const std::optional<Integer>& modulus = std::nullopt);

struct MorphismCheck {
  unsigned k = 2;
  std::size_t full_scan_limit = 10'000;  // k = 2: all pairs up to this size
  std::size_t samples = 100'000;         // otherwise random k-tuples
  std::uint64_t seed = 0x6d6f727068;
};

/// Certifies a compression map: every kept a has frac(a m theta) < 1/k, the
/// image is injective, and sum_i image(b_i) = floor((sum_i b_i) m theta) mod m
/// on all pairs (k = 2, small inputs) or on sampled k-tuples.
Verdict is_freiman_k(std::span<const Integer> kept,
                     std::span<const std::uint64_t> image, const Theta& theta,
                     std::uint64_t m, const MorphismCheck& opts = {});
inline Verdict is_freiman2(std::span<const Integer> kept,
                           std::span<const std::uint64_t> image,
                           const Theta& theta, std::uint64_t m) {
  return is_freiman_k(kept, image, theta, m, MorphismCheck{});
}

/// Each nonzero residue mod n is exactly one ordered difference d - d'.
Verdict is_perfect_difference_set(std::span<const std::uint64_t> set, std::uint64_t n);

/// The union of blocks is all of Z_modulus.
Verdict is_cover(std::span<const std::vector<std::uint64_t>> blocks,
                 std::uint64_t modulus);

}  // namespace sidon
