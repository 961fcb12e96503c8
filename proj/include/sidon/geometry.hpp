#pragma once

// Reduction of rational point sets in R^N to integer sets. A projection onto
// an integer direction with pairwise-distinct dot products, followed by
// clearing denominators, transports x + y = z + t in both directions.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sidon/extract.hpp"
#include "sidon/integer.hpp"
#include "sidon/random.hpp"

namespace sidon {

using Point = std::vector<Rational>;

class PointSet {
 public:
  /// Canonicalizes coordinates. Throws InvalidParams on ragged dimensions,
  /// dim 0, or repeated points.
  explicit PointSet(std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

struct ReductionCertificate {
  std::vector<Integer> direction;
  std::vector<Rational> projected;  // <x_i, direction>
  Integer common_denominator = 1;
  std::vector<Integer> integers;    // projected[i] * common_denominator
  Rational min_gap = 0;             // smallest gap between sorted projections
  std::size_t attempts = 0;         // random directions tried
  bool fallback_direction = false;

  // Canonical affine image fed to the extractor:
  // normalized[i] = (orientation * integers[i] - offset) / scale, with
  // orientation chosen so normalized[0] <= normalized[n-1], min 0, content 1.
  int orientation = 1;
  Integer offset = 0;
  Integer scale = 1;
  std::vector<Integer> normalized;
};

/// Integer direction u with pairwise distinct <x_i, u>; fills direction,
/// projected, min_gap, attempts. Random u in [-B, B]^N with B = 2 n^2,
/// doubling B on failure; after 64 failures the direction (1, M, ..., M^(N-1))
/// with M above twice the cleared coordinate spread.
ReductionCertificate project(const PointSet& ps, RandomStream& source);

/// Least common denominator and the cleared integers.
std::pair<Integer, std::vector<Integer>> rationalize(std::span<const Rational> values);

/// project + rationalize + canonical normalization.
ReductionCertificate reduce(const PointSet& ps, RandomStream& source);

/// Points whose reduced integer lies in chosen (values of cert.integers).
/// Throws UnknownValue for an integer absent from the certificate.
std::vector<Point> pullback_points(const PointSet& ps, const ReductionCertificate& cert,
                                   std::span<const Integer> chosen);

/// (i, j, k, l) with p_i + p_j = p_k + p_l as exact vectors, {i,j} != {k,l}.
std::optional<std::array<std::size_t, 4>> point_sum_collision(std::span<const Point> pts);
/// True when every vector sum has at most g unordered representations.
bool points_are_b2g(std::span<const Point> pts, unsigned g);

struct PointExtraction {
  ReductionCertificate cert;
  ExtractionReport report;  // over cert.normalized
  std::vector<std::size_t> indices;
  std::vector<Point> subset;
  bool vector_certified = false;
};

/// Reduce, extract, pull back, then re-certify at the vector level.
PointExtraction extract_points(const PointSet& ps, const ExtractOptions& opts,
                               const RandomStream& source);

/// n distinct random points with coordinates num/den, |num| <= num_bound,
/// 1 <= den <= den_bound.
PointSet random_rational_points(std::size_t n, std::size_t dim, RandomStream& source,
                                std::int64_t num_bound = 1'000'000,
                                std::int64_t den_bound = 1'000);

}  // namespace sidon
