#include "sidon/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sidon/error.hpp"

namespace sidon {

namespace {

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Point vec_add(const Point& a, const Point& b) {
  Point s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Rational dot(const Point& x, std::span<const Integer> u) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * Rational(u[i]);
  return acc;
}

// Distinct projections, plus the smallest gap between consecutive values.
std::optional<Rational> distinct_gap(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  Rational gap = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Rational d = values[i] - values[i - 1];
    if (d == 0) return std::nullopt;
    if (i == 1 || d < gap) gap = d;
  }
  return gap;
}

std::vector<Integer> fallback_direction(const PointSet& ps) {
  std::vector<Rational> coords;
  for (const Point& p : ps.points()) coords.insert(coords.end(), p.begin(), p.end());
  auto [den, cleared] = rationalize(coords);
  const auto [lo, hi] = std::minmax_element(cleared.begin(), cleared.end());
  const Integer base = 2 * (*hi - *lo) + 1;
  std::vector<Integer> u(ps.dim());
  Integer power = 1;
  for (auto& x : u) {
    x = power;
    power *= base;
  }
  return u;
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dim_ = points_.front().size();
  if (dim_ == 0) throw Error(Errc::invalid_params, "points must have dimension >= 1");
  for (Point& p : points_) {
    if (p.size() != dim_) throw Error(Errc::invalid_params, "ragged point dimensions");
    for (Rational& x : p) x.canonicalize();
  }
  std::vector<const Point*> order;
  order.reserve(points_.size());
  for (const Point& p : points_) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Point* a, const Point* b) { return lex_less(*a, *b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (*order[i] == *order[i - 1]) throw Error(Errc::invalid_params, "repeated point");
  }
}

ReductionCertificate project(const PointSet& ps, RandomStream& source) {
  ReductionCertificate cert;
  const std::size_t n = ps.size();
  const std::size_t dim = std::max<std::size_t>(ps.dim(), 1);
  auto try_direction = [&](std::vector<Integer> u) {
    std::vector<Rational> proj;
    proj.reserve(n);
    for (const Point& p : ps.points()) proj.push_back(dot(p, u));
    auto gap = distinct_gap(proj);
    if (!gap) return false;
    cert.direction = std::move(u);
    cert.projected = std::move(proj);
    cert.min_gap = *gap;
    return true;
  };

  Integer bound = Integer(static_cast<unsigned long>(n)) * n * 2;
  if (bound < 1) bound = 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ++cert.attempts;
    std::vector<Integer> u(dim);
    const unsigned bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2)) + 1;
    const Integer width = 2 * bound + 1;
    for (auto& x : u) {
      // Uniform in [0, 2B] by rejection on a power-of-two range, shifted to [-B, B].
      Integer r;
      do {
        r = source.bits(bits);
      } while (r >= width);
      x = r - bound;
    }
    if (try_direction(std::move(u))) return cert;
    bound *= 2;
  }
  cert.fallback_direction = true;
  if (!try_direction(fallback_direction(ps))) {
    throw Error(Errc::certification_failed, "fallback direction produced a collision");
  }
  return cert;
}

std::pair<Integer, std::vector<Integer>> rationalize(std::span<const Rational> values) {
  Integer den = 1;
  for (const Rational& v : values) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.get_num() * (den / v.get_den()));
  return {den, std::move(out)};
}

ReductionCertificate reduce(const PointSet& ps, RandomStream& source) {
  ReductionCertificate cert = project(ps, source);
  auto [den, ints] = rationalize(cert.projected);
  cert.common_denominator = den;
  cert.integers = std::move(ints);

  const std::size_t n = cert.integers.size();
  if (n == 0) return cert;
  cert.orientation = (n >= 2 && cert.integers[0] > cert.integers[n - 1]) ? -1 : 1;
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = cert.orientation * cert.integers[i];
  cert.offset = *std::min_element(v.begin(), v.end());
  Integer content = 0;
  for (auto& x : v) {
    x -= cert.offset;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  }
  cert.scale = content == 0 ? Integer(1) : content;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cert.scale.get_mpz_t());
  cert.normalized = std::move(v);
  return cert;
}

std::vector<Point> pullback_points(const PointSet& ps, const ReductionCertificate& cert,
                                   std::span<const Integer> chosen) {
  std::map<Integer, std::size_t> where;
  for (std::size_t i = 0; i < cert.integers.size(); ++i) where.emplace(cert.integers[i], i);
  std::vector<Point> out;
  out.reserve(chosen.size());
  for (const Integer& x : chosen) {
    auto it = where.find(x);
    if (it == where.end()) {
      throw Error(Errc::unknown_value, to_string(x) + " is not a reduced value");
    }
    out.push_back(ps[it->second]);
  }
  return out;
}

std::optional<std::array<std::size_t, 4>> point_sum_collision(std::span<const Point> pts) {
  struct Entry {
    Point sum;
    std::size_t i, j;
  };
  std::vector<Entry> sums;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) sums.push_back({vec_add(pts[i], pts[j]), i, j});
  std::sort(sums.begin(), sums.end(), [](const Entry& a, const Entry& b) {
    if (a.sum != b.sum) return lex_less(a.sum, b.sum);
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (std::size_t t = 1; t < sums.size(); ++t) {
    if (sums[t].sum == sums[t - 1].sum) {
      return std::array{sums[t - 1].i, sums[t - 1].j, sums[t].i, sums[t].j};
    }
  }
  return std::nullopt;
}

bool points_are_b2g(std::span<const Point> pts, unsigned g) {
  std::map<Point, unsigned, decltype(&lex_less)> count(&lex_less);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      if (++count[vec_add(pts[i], pts[j])] > g) return false;
    }
  }
  return true;
}

PointExtraction extract_points(const PointSet& ps, const ExtractOptions& opts,
                               const RandomStream& source) {
  if (ps.size() == 0) throw Error(Errc::empty_input, "no points");
  PointExtraction out;
  RandomStream projection = source.split(0x70726f6a);
  out.cert = reduce(ps, projection);
  out.report = extract_b2g(out.cert.normalized, opts, source);

  std::map<Integer, std::size_t> where;
  for (std::size_t i = 0; i < out.cert.normalized.size(); ++i) {
    where.emplace(out.cert.normalized[i], i);
  }
  std::vector<Integer> chosen;
  for (const Integer& x : out.report.subset) {
    const std::size_t i = where.at(x);
    out.indices.push_back(i);
    chosen.push_back(out.cert.integers[i]);
  }
  out.subset = pullback_points(ps, out.cert, chosen);

  const bool ok = opts.g == 1 ? !point_sum_collision(out.subset).has_value()
                              : points_are_b2g(out.subset, opts.g);
  if (!ok) throw Error(Errc::certification_failed, "pulled-back points fail the vector check");
  out.vector_certified = true;
  return out;
}

PointSet random_rational_points(std::size_t n, std::size_t dim, RandomStream& source,
                                std::int64_t num_bound, std::int64_t den_bound) {
  std::set<Point, decltype(&lex_less)> seen(&lex_less);
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    Point p(dim);
    for (auto& x : p) {
      x = Rational(Integer(static_cast<long>(source.in_range(-num_bound, num_bound))),
                   Integer(static_cast<long>(source.in_range(1, den_bound))));
      x.canonicalize();
    }
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

}  // namespace sidon
