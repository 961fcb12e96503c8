#pragma once

// Independent reference implementations used by the tests. Deliberately
// naive: quadruple loops and subset enumeration, no shared code with src/.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sidon/integer.hpp"
#include "sidon/random.hpp"

namespace sidon::testing {

inline std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Integer> range(long lo, long hi) {
  std::vector<Integer> v;
  for (long x = lo; x <= hi; ++x) v.emplace_back(x);
  return v;
}

// Number of unordered representations x + y = s (x <= y) for every sum s,
// optionally reduced mod m.
inline std::map<Integer, unsigned> representation_counts(const std::vector<Integer>& s,
                                                         const Integer& m = 0) {
  std::map<Integer, unsigned> reps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      Integer t = s[i] + s[j];
      if (m != 0) t = ((t % m) + m) % m;
      ++reps[t];
    }
  }
  return reps;
}

inline bool naive_b2g(const std::vector<Integer>& s, unsigned g, const Integer& m = 0) {
  for (const auto& [sum, c] : representation_counts(s, m)) {
    if (c > g) return false;
  }
  return true;
}

inline bool naive_sidon(const std::vector<Integer>& s, const Integer& m = 0) {
  return naive_b2g(s, 1, m);
}

inline bool naive_sidon_u64(const std::vector<std::uint64_t>& s, std::uint64_t m, unsigned g = 1) {
  std::vector<Integer> v;
  for (auto x : s) v.emplace_back(static_cast<unsigned long>(x));
  return naive_b2g(v, g, Integer(static_cast<unsigned long>(m)));
}

// Largest B2[g] subset by enumerating all 2^n subsets.
inline std::size_t brute_max_b2g(const std::vector<Integer>& a, unsigned g) {
  const std::size_t n = a.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::vector<Integer> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(a[i]);
    }
    if (naive_b2g(sub, g)) best = size;
  }
  return best;
}

inline std::vector<Integer> random_set(RandomStream& rng, std::size_t n, std::int64_t lo,
                                       std::int64_t hi) {
  std::set<Integer> seen;
  while (seen.size() < n) seen.insert(Integer(static_cast<long>(rng.in_range(lo, hi))));
  return {seen.begin(), seen.end()};
}

inline std::vector<Integer> random_bits_set(RandomStream& rng, std::size_t n, unsigned bits) {
  std::set<Integer> seen;
  while (seen.size() < n) seen.insert(rng.bits(bits));
  return {seen.begin(), seen.end()};
}

}  // namespace sidon::testing
