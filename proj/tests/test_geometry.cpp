#include <gtest/gtest.h>

#include "sidon/error.hpp"
#include "sidon/geometry.hpp"
#include "support.hpp"

using namespace sidon;
using namespace sidon::testing;

namespace {

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

PointSet unit_square() {
  return PointSet({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

ReductionCertificate with_direction(const PointSet& ps, std::vector<Integer> u) {
  ReductionCertificate c;
  for (const Point& p : ps.points()) {
    Rational acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * Rational(u[i]);
    c.projected.push_back(acc);
  }
  c.direction = std::move(u);
  auto [den, ints] = rationalize(c.projected);
  c.common_denominator = den;
  c.integers = ints;
  return c;
}

}  // namespace

TEST(PointSet, Validation) {
  EXPECT_THROW(PointSet({pt({0, 0}), pt({1})}), Error);
  EXPECT_THROW(PointSet({pt({1, 2}), pt({Rational(2, 2), 2})}), Error);
  EXPECT_THROW(PointSet({Point{}}), Error);
  EXPECT_EQ(unit_square().dim(), 2u);
}

TEST(Project, SquareExampleDirections) {
  const auto ps = unit_square();
  const auto good = with_direction(ps, {1, 2});
  EXPECT_EQ(good.integers, ints({0, 1, 2, 3}));
  const auto bad = with_direction(ps, {1, 1});
  EXPECT_EQ(bad.projected[1], bad.projected[2]);  // (1,0) and (0,1) collide
}

TEST(Project, FindsDistinctDirection) {
  RandomStream rng(41);
  const auto ps = unit_square();
  const auto c = project(ps, rng);
  ASSERT_EQ(c.direction.size(), 2u);
  std::set<Rational> vals(c.projected.begin(), c.projected.end());
  EXPECT_EQ(vals.size(), 4u);
  EXPECT_GT(c.min_gap, 0);
  EXPECT_GE(c.attempts, 1u);
  for (const auto& u : c.direction) EXPECT_LE(abs(u), 2 * 16 * (1 << 6));
}

TEST(Project, SinglePoint) {
  RandomStream rng(42);
  const auto c = project(PointSet({pt({Rational(1, 3), 5, -2})}), rng);
  EXPECT_EQ(c.projected.size(), 1u);
}

TEST(Project, RandomRationalCloudsAreSeparated) {
  RandomStream rng(43);
  for (int t = 0; t < 10; ++t) {
    const auto ps = random_rational_points(200, 1 + rng.below(6), rng, 50, 7);
    const auto c = reduce(ps, rng);
    std::set<Integer> vals(c.integers.begin(), c.integers.end());
    EXPECT_EQ(vals.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_EQ(Rational(c.integers[i]), c.projected[i] * Rational(c.common_denominator));
      EXPECT_EQ(c.normalized[i] * c.scale + c.offset, c.orientation * c.integers[i]);
    }
    EXPECT_EQ(*std::min_element(c.normalized.begin(), c.normalized.end()), 0);
  }
}

TEST(Rationalize, Examples) {
  {
    const std::vector<Rational> v = {Rational(1, 2), Rational(2, 3), Rational(5, 6)};
    auto [den, ints_] = rationalize(v);
    EXPECT_EQ(den, 6);
    EXPECT_EQ(ints_, ints({3, 4, 5}));
  }
  {
    const std::vector<Rational> v = {7, -2, 0};
    auto [den, ints_] = rationalize(v);
    EXPECT_EQ(den, 1);
    EXPECT_EQ(ints_, ints({7, -2, 0}));
  }
  {
    const std::vector<Rational> v = {0, Rational(1, 3), Rational(1, 2), Rational(5, 6)};
    auto [den, ints_] = rationalize(v);
    EXPECT_EQ(den, 6);
    EXPECT_EQ(ints_, ints({0, 2, 3, 5}));
    EXPECT_EQ(v[0] + v[3], v[1] + v[2]);
    EXPECT_EQ(ints_[0] + ints_[3], ints_[1] + ints_[2]);
  }
}

TEST(Pullback, SquareExample) {
  const auto ps = unit_square();
  const auto c = with_direction(ps, {1, 2});
  const auto pts = pullback_points(ps, c, ints({0, 1, 3}));
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0], pt({0, 0}));
  EXPECT_EQ(pts[1], pt({1, 0}));
  EXPECT_EQ(pts[2], pt({1, 1}));
  EXPECT_FALSE(point_sum_collision(pts));
  EXPECT_TRUE(pullback_points(ps, c, {}).empty());
  EXPECT_EQ(pullback_points(ps, c, c.integers).size(), 4u);
  try {
    pullback_points(ps, c, ints({9}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_value);
  }
}

TEST(PointSums, CollisionDetection) {
  const auto ps = unit_square();
  const auto hit = point_sum_collision(ps.points());
  ASSERT_TRUE(hit);
  const auto [i, j, k, l] = *hit;
  Point lhs(2), rhs(2);
  for (int d = 0; d < 2; ++d) {
    lhs[d] = ps[i][d] + ps[j][d];
    rhs[d] = ps[k][d] + ps[l][d];
  }
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(points_are_b2g(ps.points(), 2));
  EXPECT_FALSE(points_are_b2g(ps.points(), 1));
}

TEST(EquationTransport, ForwardOnRandomQuadruples) {
  // Points built as p + q = r + s by construction, then reduced.
  RandomStream rng(44);
  for (int t = 0; t < 200; ++t) {
    const auto base = random_rational_points(3, 3, rng, 100, 9);
    const Point& p = base[0];
    const Point& q = base[1];
    const Point& r = base[2];
    Point s(3);
    for (int d = 0; d < 3; ++d) s[d] = p[d] + q[d] - r[d];
    if (s == p || s == q || s == r) continue;
    const PointSet ps({p, q, r, s});
    const auto c = reduce(ps, rng);
    EXPECT_EQ(c.integers[0] + c.integers[1], c.integers[2] + c.integers[3]);
    EXPECT_EQ(c.normalized[0] + c.normalized[1], c.normalized[2] + c.normalized[3]);
  }
}

TEST(ExtractPoints, VectorCertified) {
  RandomStream rng(45);
  const auto ps = random_rational_points(1500, 4, rng);
  ExtractOptions opts;
  opts.trials = 20;
  const auto e = extract_points(ps, opts, RandomStream(7));
  EXPECT_TRUE(e.vector_certified);
  EXPECT_EQ(e.subset.size(), e.report.subset.size());
  EXPECT_FALSE(point_sum_collision(e.subset));
  for (std::size_t i = 0; i < e.indices.size(); ++i) EXPECT_EQ(ps[e.indices[i]], e.subset[i]);
}

TEST(ExtractPoints, DimensionIndependence) {
  RandomStream rng(46);
  const auto values = random_set(rng, 2000, -1'000'000, 1'000'000);
  ExtractOptions opts;
  opts.trials = 20;
  std::optional<std::size_t> size;
  for (std::size_t dim : {1u, 3u, 8u}) {
    std::vector<Point> pts;
    for (const auto& v : values) {
      Point p(dim, Rational(0));
      p[0] = Rational(v, 7);
      pts.push_back(p);
    }
    const auto e = extract_points(PointSet(std::move(pts)), opts, RandomStream(8));
    if (!size) size = e.subset.size();
    EXPECT_EQ(e.subset.size(), *size) << dim;
  }
}

TEST(ExtractPoints, B2gVectorCheck) {
  RandomStream rng(47);
  const auto ps = random_rational_points(800, 2, rng, 1000, 3);
  ExtractOptions opts;
  opts.trials = 10;
  opts.g = 2;
  const auto e = extract_points(ps, opts, RandomStream(9));
  EXPECT_TRUE(points_are_b2g(e.subset, 2));
}
