#pragma once

// Machine-readable rendering of every command's result. JSON documents carry
// "schema": 1; CSV column order is fixed (see README). Big integers are
// emitted as decimal strings, rationals as "p/q".

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sidon/bench.hpp"
#include "sidon/extract.hpp"
#include "sidon/geometry.hpp"
#include "sidon/oracle.hpp"
#include "sidon/singer.hpp"
#include "sidon/verify.hpp"

namespace sidon {

enum class Format { json, csv, text };

Format parse_format(std::string_view name);  // throws InvalidParams
std::string fixed6(double v);

std::string render(const ExtractionReport& rep, Format fmt);
std::string render(const PointExtraction& ext, Format fmt);
std::string render(const OracleResult& res, unsigned g, Format fmt);
std::string render(const PlanarDifferenceSet& d, const Cover& cover, Format fmt);
std::string render(const BenchTable& table, Format fmt, bool timing = false);

struct VerifyOutcome {
  unsigned g = 1;
  std::optional<Integer> modulus;
  std::size_t n = 0;
  std::size_t dedup_removed = 0;
  Verdict verdict;
};
std::string render(const VerifyOutcome& out, Format fmt);

}  // namespace sidon
