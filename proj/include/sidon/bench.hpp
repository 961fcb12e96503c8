#pragma once

// Benchmark families and the batch runner behind `sidon bench`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidon/extract.hpp"
#include "sidon/integer.hpp"
#include "sidon/random.hpp"

namespace sidon {

struct BenchFamily {
  std::string name;  // interval | squares | primes | dominoes | two-intervals | geometric | random
  std::size_t n = 0;
  std::uint64_t gap = 3;    // dominoes: minimum distance between pair starts
  std::uint64_t ratio = 2;  // geometric: common ratio
  std::optional<std::size_t> split;  // two-intervals: size of the first interval (default n/2)
  std::optional<std::uint64_t> separation;  // two-intervals: empty stretch between them (default n)
};

const std::vector<std::string>& family_names();

/// Exactly n distinct integers, ascending. Throws UnknownFamily, InvalidParams.
std::vector<Integer> generate_family(const BenchFamily& family, const RandomStream& source);

/// First n primes by sieve.
std::vector<std::uint64_t> first_primes(std::size_t n);

struct BenchConfig {
  std::uint64_t seed = 0;
  std::size_t instances = 1;
  ExtractOptions extract;
  bool with_oracle = false;  // the oracle always runs for n <= 30
  std::uint64_t oracle_budget = 50'000'000;
  unsigned workers = 0;      // instance-level pool; 0: hardware concurrency
  bool timing = false;       // measure wall time (never part of the byte-stable output)
};

struct BenchRow {
  std::string family;
  std::size_t instance = 0;
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::size_t b_size = 0;
  std::size_t kept = 0;
  std::size_t subset = 0;
  double ratio = 0.0;
  std::optional<std::size_t> oracle_optimum;
  bool oracle_exhausted = false;
  double wall_ms = 0.0;
};

struct BenchTable {
  std::vector<BenchRow> rows;  // instance order
  double min_ratio = 0.0;
  double mean_ratio = 0.0;     // rounded to 6 places
};

BenchTable run_bench(const BenchFamily& family, const BenchConfig& config);

}  // namespace sidon
