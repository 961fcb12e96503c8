#pragma once

// Text input: integer sets (one per line) and rational point sets (one point
// per line, whitespace-separated coordinates). Blank lines and '#' comments
// are ignored in both formats.

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "sidon/geometry.hpp"
#include "sidon/integer.hpp"

namespace sidon {

struct IntegerInput {
  std::vector<Integer> values;  // ascending, distinct
  std::size_t dedup_removed = 0;
};

struct PointInput {
  PointSet points{{}};  // first-occurrence order, distinct
  std::size_t dedup_removed = 0;
};

/// Decimal literal (optional sign, fraction, exponent) or p/q, converted
/// exactly. Throws ParseError.
Rational parse_rational(const std::string& field);

/// Throws ParseError (with the line number) or EmptyFile.
IntegerInput parse_integers(std::istream& in);
PointInput parse_points(std::istream& in);

IntegerInput read_integers(const std::string& path);
PointInput read_points(const std::string& path);

}  // namespace sidon
