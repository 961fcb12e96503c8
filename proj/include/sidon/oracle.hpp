#pragma once

// Exact maximum Sidon / B2[g] subsets of small sets by branch and bound.

#include <cstdint>
#include <span>
#include <vector>

#include "sidon/integer.hpp"

namespace sidon {

struct OracleResult {
  std::size_t optimum = 0;
  std::vector<Integer> witness;  // ascending
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;  // false: budget hit, optimum is only a lower bound
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Values must satisfy |a| < 2^62; duplicates are ignored.
OracleResult max_sidon(std::span<const Integer> a,
                       std::uint64_t budget = kDefaultOracleBudget);
OracleResult max_b2g(std::span<const Integer> a, unsigned g,
                     std::uint64_t budget = kDefaultOracleBudget);

}  // namespace sidon
