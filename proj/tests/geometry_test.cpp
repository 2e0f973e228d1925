#include <gtest/gtest.h>

#include "planeprover/geometry/geometry.hpp"
#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/numeric.hpp"
#include "support.hpp"

namespace {

using planeprover::Errc;
using planeprover::Error;
using planeprover::geometry::Geometry;
using planeprover::geometry::Line;
using planeprover::geometry::Point;
using testing_support::Gen;
using testing_support::Scalar;
using testing_support::Session;
using testing_support::SessionPtr;
using testing_support::var;
namespace kernel = planeprover::kernel;

}  // namespace

namespace planeprover::geometry {
void PrintTo(const Point& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace planeprover::geometry
namespace planeprover::kernel {
void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace planeprover::kernel

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }
Point pt(long a, long b) { return {q(a), q(b)}; }

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

class GeometryTest : public ::testing::Test {
 protected:
  SessionPtr s = Session::create();
  Geometry g{s};
  Scalar x = g.x(), y = g.y();

  Point sym(const std::string& name) { return {var(s, name + "1"), var(s, name + "2")}; }
};

TEST_F(GeometryTest, AreaAndDistances) {
  EXPECT_EQ(g.area(pt(0, 0), pt(1, 0), pt(0, 1)), q(1, 2));
  EXPECT_EQ(g.area(pt(0, 0), pt(2, 0), pt(0, 3)), q(3));
  Point a = sym("A"), b = sym("B");
  EXPECT_TRUE(g.area(a, b, b).is_zero());
  EXPECT_EQ(g.de_sq(pt(0, 0), pt(3, 4)), q(25));
  EXPECT_TRUE(g.de_sq(a, a).is_zero());
  EXPECT_EQ(g.de_sq_g({q(0), q(0), q(0)}, {q(1), q(2), q(2)}, 3), q(9));
  EXPECT_EQ(error_of([&] { g.de_sq_g({q(0), q(0)}, {q(1), q(2), q(2)}, 3); }), Errc::shape);
}

TEST_F(GeometryTest, LinesSlopesMidpoints) {
  EXPECT_EQ(g.line_through(pt(0, 0), pt(1, 1)), (y - x) / q(2));
  EXPECT_EQ(g.midpoint(pt(0, 0), pt(2, 4)), pt(1, 2));
  EXPECT_EQ(g.slope(pt(0, 0), pt(2, 1)), q(1, 2));
  Point a = sym("A");
  EXPECT_EQ(error_of([&] { g.slope(a, Point{a.x, a.y + 1}); }), Errc::pole);
}

TEST_F(GeometryTest, FeetAndAltitudes) {
  Line l = x + y - 1;
  EXPECT_EQ(g.foot(pt(0, 0), l), (Point{q(1, 2), q(1, 2)}));
  EXPECT_EQ(g.altitude(pt(0, 0), l), y - x);
  Point p = sym("P"), a = sym("A"), b = sym("B");
  Line ab = g.line_through(a, b);
  EXPECT_TRUE(g.at(ab, g.foot(p, ab)).is_zero());
  EXPECT_EQ(g.de_pt_line_sq(pt(0, 0), l), q(1, 2));
}

TEST_F(GeometryTest, Reflections) {
  EXPECT_EQ(g.mirror_origin(pt(1, 0), pt(1, 1)), pt(2, 0));
  EXPECT_EQ(g.mirror_origin(pt(0, 1), pt(1, 0)), pt(1, 1));
  Point a = sym("A"), b = sym("B");
  EXPECT_EQ(g.mirror_pt_line(g.origin(), g.line_through(a, b)), g.mirror_origin(a, b));
  // Reflecting twice is the identity.
  Point p = sym("P");
  Line l = g.line_through(a, b);
  EXPECT_EQ(g.mirror_pt_line(g.mirror_pt_line(p, l), l), p);
}

TEST_F(GeometryTest, IntersectionsAndConcurrency) {
  EXPECT_EQ(g.intersect(y - x, x + y - 1), (Point{q(1, 2), q(1, 2)}));
  EXPECT_EQ(error_of([&] { g.intersect(x, x - 1); }), Errc::degenerate_intersection);
  EXPECT_EQ(error_of([&] { g.intersect(x * x, y); }), Errc::nonlinear_system);
  EXPECT_TRUE(g.concurrent({x, y, x + y}));
  EXPECT_FALSE(g.concurrent({x, x - 1}));
  EXPECT_TRUE(g.concurrent({x, x * 2}));
  EXPECT_EQ(g.concurrency_point({x, y, x + y}), pt(0, 0));
  EXPECT_EQ(error_of([&] { g.concurrency_point({x, y, x + y - 1}); }), Errc::no_common_point);
  EXPECT_EQ(error_of([&] { g.concurrency_point({x, x - 1}); }), Errc::no_common_point);
  EXPECT_TRUE(g.colinear({pt(0, 0), pt(1, 1), pt(2, 2)}));
  EXPECT_FALSE(g.colinear({pt(0, 0), pt(1, 1), pt(2, 3)}));
  EXPECT_EQ(error_of([&] { g.colinear({pt(0, 0)}); }), Errc::invalid_argument);
  auto corners = g.quad(x, y, x - 1, y - 1);
  EXPECT_EQ(corners[0], pt(0, 0));
  EXPECT_EQ(corners[1], pt(1, 0));
  EXPECT_EQ(corners[2], pt(1, 1));
  EXPECT_EQ(corners[3], pt(0, 1));
}

TEST_F(GeometryTest, Circles) {
  Scalar c = g.circle_through({pt(0, 0), pt(1, 0), pt(0, 1)});
  EXPECT_EQ(c, x * x + y * y - x - y);
  EXPECT_EQ(g.center(c), (Point{q(1, 2), q(1, 2)}));
  EXPECT_EQ(g.radius_sq(c), q(1, 2));
  EXPECT_EQ(error_of([&] { g.circle_through({pt(0, 0), pt(1, 1), pt(2, 2)}); }), Errc::degenerate_circle);
  Point o = sym("C");
  Scalar r = var(s, "R");
  std::vector<Point> on;
  for (const char* t : {"t1", "t2", "t3", "t4"}) on.push_back(g.param_circle(o, r, var(s, t)));
  EXPECT_TRUE(g.concyclic(on));
  on[3] = sym("P");
  EXPECT_FALSE(g.concyclic(on));
}

TEST_F(GeometryTest, TriangleCenters) {
  Point a = pt(0, 0), b = pt(1, 0), c = pt(0, 1);
  EXPECT_EQ(g.centroid(a, b, c), (Point{q(1, 3), q(1, 3)}));
  EXPECT_EQ(g.orthocenter(a, b, c), pt(0, 0));
  Scalar r3 = Scalar::variable(s, Session::kSqrt3);
  // The erected apex is (1/2, -r3/2), below the base; the center sits a third of the way down.
  EXPECT_EQ(g.cet(a, b), (Point{q(1, 2), -r3 / q(6)}));
  EXPECT_TRUE(g.is_equilateral(a, b, Point{q(1, 2), r3 / q(2)}));
  EXPECT_FALSE(g.is_equilateral(a, b, c));
  // Euler line passes through the centroid of a generic triangle.
  Point p = sym("A"), q2 = sym("B"), r = sym("C");
  EXPECT_TRUE(g.at(g.euler_line(p, q2, r), g.centroid(p, q2, r)).is_zero());
}

TEST_F(GeometryTest, Parametrizations) {
  Scalar r = var(s, "R"), t = var(s, "t");
  Point p = g.param_circle(g.origin(), r, t);
  EXPECT_TRUE((p.x * p.x + p.y * p.y - r * r).is_zero());
  EXPECT_EQ(g.param_line(q(2), q(1), t), (Point{t, t * 2 + 1}));
  EXPECT_EQ(g.param_ellipse(g.origin(), Point{r, r}, t), p);
  Scalar d1 = var(s, "d1"), d2 = var(s, "d2");
  Point e = g.param_ellipse(g.origin(), Point{d1, d2}, t);
  EXPECT_TRUE((e.x * e.x / (d1 * d1) + e.y * e.y / (d2 * d2) - 1).is_zero());
}

TEST_F(GeometryTest, Tangents) {
  Scalar unit = x * x + y * y - 1;
  Scalar t1 = g.tangent(unit, pt(1, 0));
  EXPECT_TRUE(kernel::divide_exact(t1, x - 1).is_constant());
  Scalar t2 = g.tangent(unit, pt(0, 1));
  EXPECT_TRUE(kernel::divide_exact(t2, y - 1).is_constant());
  EXPECT_EQ(error_of([&] { g.tangent(unit, pt(1, 1)); }), Errc::not_incident);
  Scalar t = var(s, "t");
  Point at = g.param_ellipse(g.origin(), pt(1, 1), t);
  EXPECT_TRUE(g.at(g.tangent_to_ellipse(g.origin(), pt(1, 1), t), at).is_zero());
  EXPECT_EQ(error_of([&] { g.tangent_to_ellipse(g.origin(), pt(1, 1), t * 2); }), Errc::invalid_argument);
}

TEST_F(GeometryTest, Touching) {
  EXPECT_TRUE(g.tc_ces_out(pt(0, 0), q(1), pt(3, 0), q(2)).is_zero());
  EXPECT_TRUE(g.touch_circles(x * x + y * y - 1, x * x + (y - 2) * (y - 2) - 1));
  EXPECT_FALSE(g.touch_circles(x * x + y * y - 1, x * x + (y - 1) * (y - 1) - 1));
  // Radical line x = 1: handled by the x fallback.
  EXPECT_TRUE(g.touch_circles(x * x + y * y - 1, (x - 2) * (x - 2) + y * y - 1));
  EXPECT_EQ(error_of([&] { g.touch_circles(x * x + y * y - 1, x * x + y * y - 4); }), Errc::unsupported_orientation);
  EXPECT_TRUE(g.touch_circle_line(x * x + y * y - 1, y - 1));
  EXPECT_FALSE(g.touch_circle_line(x * x + y * y - 1, y - x));
  EXPECT_TRUE(g.touch_circle_line(x * x + y * y - 1, x + 1));
}

TEST_F(GeometryTest, TanSum) {
  Scalar m = var(s, "m"), n = var(s, "n"), t = var(s, "t");
  EXPECT_EQ(g.tan_sum({m}), m);
  EXPECT_EQ(g.tan_sum({m, n}), (m + n) / (1 - m * n));
  EXPECT_TRUE(g.tan_sum({t, -t}).is_zero());
  EXPECT_EQ(error_of([&] { g.tan_sum({q(1), q(1)}); }), Errc::pole);
}

TEST_F(GeometryTest, StandardTriangle) {
  auto tri = g.standard_triangle(q(1, 2), q(1, 2));
  EXPECT_EQ(tri.c, (Point{q(1, 2), q(2, 3)}));
  Scalar m = var(s, "m"), n = var(s, "n");
  EXPECT_EQ(g.incenter(m, m), (Point{q(1, 2), m / q(2)}));
  // Generic incenter lies on both base bisectors and is equidistant from the sides.
  Point o = g.incenter(m, n);
  EXPECT_TRUE((o.y - m * o.x).is_zero());
  Scalar r = g.inradius_sq(m, n);
  EXPECT_EQ(r, o.y * o.y);
  Scalar circle = g.incircle(m, n);
  EXPECT_TRUE(g.touch_circle_line(circle, y));
}

TEST_F(GeometryTest, SqrtSum) {
  EXPECT_TRUE(g.sqrt_sum(q(9), q(16), q(49)));
  EXPECT_FALSE(g.sqrt_sum(q(1), q(1), q(1)));
}

// Symbolic invariants over generic points.

TEST_F(GeometryTest, IncidencePerpendicularityCircleThrough) {
  Point a = sym("A"), b = sym("B"), c = sym("C"), p = sym("P");
  Line ab = g.line_through(a, b);
  EXPECT_TRUE(g.at(ab, a).is_zero());
  EXPECT_TRUE(g.at(ab, b).is_zero());
  Line alt = g.altitude(p, ab);
  Scalar dot = kernel::coeff(ab, Session::kX, 1) * kernel::coeff(alt, Session::kX, 1) +
               kernel::coeff(ab, Session::kY, 1) * kernel::coeff(alt, Session::kY, 1);
  EXPECT_TRUE(dot.is_zero());
  Scalar circ = g.circle_through({a, b, c});
  for (const Point& v : {a, b, c}) EXPECT_TRUE(g.at(circ, v).is_zero());
  Point o = g.center(circ);
  Scalar rebuilt = (x - o.x) * (x - o.x) + (y - o.y) * (y - o.y) - g.radius_sq(circ);
  EXPECT_EQ(rebuilt, circ);
}

// Randomized rational configurations: symbolic booleans and invariants
// against eval_at at random parameter points.
class GeometryProperty : public ::testing::Test {
 protected:
  Gen gen{20260518};

  Point random_point(const SessionPtr&) { return {Scalar(gen.rational(20)), Scalar(gen.rational(20))}; }
};

TEST_F(GeometryProperty, ConcurrentScalingAndColinearPermutation) {
  for (int round = 0; round < 300; ++round) {
    auto s = Session::create();
    Geometry g(s);
    Scalar x = g.x(), y = g.y();
    std::vector<Line> lines;
    for (int k = 0; k < 3; ++k) {
      lines.push_back(Scalar(gen.rational()) * x + Scalar(gen.rational()) * y + Scalar(gen.rational()));
    }
    if (gen.coin()) {
      // Force a common point through the first two.
      try {
        Point p = g.intersect(lines[0], lines[1]);
        lines[2] = lines[2] - g.at(lines[2], p);
      } catch (const Error&) {
      }
    }
    bool before = g.concurrent(lines);
    std::vector<Line> scaled = lines;
    for (auto& l : scaled) {
      mpq_class c;
      do c = gen.rational(); while (c == 0);
      l = l * Scalar(c);
    }
    EXPECT_EQ(before, g.concurrent(scaled));

    std::vector<Point> pts{random_point(s), random_point(s)};
    Point third = gen.coin() ? random_point(s)
                             : Point{pts[0].x + (pts[1].x - pts[0].x) * Scalar(gen.rational()),
                                     pts[0].y + (pts[1].y - pts[0].y) * Scalar(gen.rational())};
    pts.push_back(third);
    bool col = g.colinear(pts);
    std::vector<int> idx{0, 1, 2};
    while (std::next_permutation(idx.begin(), idx.end())) {
      if (pts[idx[0]] == pts[idx[1]]) continue;
      EXPECT_EQ(col, g.colinear({pts[idx[0]], pts[idx[1]], pts[idx[2]]}));
    }
  }
}

TEST_F(GeometryProperty, TanSumAssociative) {
  auto s = Session::create();
  Geometry g(s);
  Scalar a = var(s, "a"), b = var(s, "b"), c = var(s, "c");
  EXPECT_EQ(g.tan_sum({a, b, c}), g.tan_sum({g.tan_sum({a, b}), c}));
  for (int round = 0; round < 300; ++round) {
    Scalar u(gen.rational()), v(gen.rational()), w(gen.rational());
    try {
      EXPECT_EQ(g.tan_sum({u, v, w}), g.tan_sum({g.tan_sum({u, v}), w}));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::pole);
    }
  }
}

// Booleans decided symbolically must agree with the residuals evaluated at
// random rational instantiations of the parameters.
TEST_F(GeometryProperty, BooleansAgreeWithNumericEvaluation) {
  auto s = Session::create();
  Geometry g(s);
  Scalar x = g.x(), y = g.y();
  auto p = [&](const std::string& n) { return Point{var(s, n + "1"), var(s, n + "2")}; };
  Point a = p("A"), b = p("B"), c = p("C"), d = p("D");
  Scalar t = var(s, "t"), u = var(s, "u");
  auto numerically_zero = [&](const std::vector<Scalar>& residuals) {
    std::vector<kernel::Var> vars{Session::kX, Session::kY};
    for (std::size_t k = 4; k < s->size(); ++k) vars.push_back(kernel::Var{static_cast<std::uint8_t>(k)});
    int agreed = 0, zero = 0;
    while (agreed < 5) {
      auto at = gen.point(vars);
      try {
        bool all = true;
        for (const Scalar& r : residuals) all = all && kernel::eval_at(r, at).is_zero();
        zero += all;
        ++agreed;
      } catch (const Error& e) {
        if (e.code() != Errc::evaluation_pole) throw;
      }
    }
    EXPECT_TRUE(zero == 0 || zero == 5) << "numeric evaluation disagrees with itself";
    return zero == 5;
  };

  Point on_ab{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
  for (const auto& pts : std::vector<std::vector<Point>>{{a, b, on_ab}, {a, b, c}, {a, b, on_ab, c}}) {
    EXPECT_EQ(g.colinear(pts), numerically_zero(g.colinearity_residuals(pts)));
  }
  std::vector<Point> circle{g.param_circle(a, u, t), g.param_circle(a, u, var(s, "t2")),
                            g.param_circle(a, u, var(s, "t3")), g.param_circle(a, u, var(s, "t4"))};
  EXPECT_EQ(g.concyclic(circle), numerically_zero(g.concyclicity_residuals(circle)));
  circle[3] = d;
  EXPECT_EQ(g.concyclic(circle), numerically_zero(g.concyclicity_residuals(circle)));

  std::vector<Line> medians{g.line_through(g.midpoint(a, b), c), g.line_through(g.midpoint(a, c), b),
                            g.line_through(g.midpoint(b, c), a)};
  EXPECT_EQ(g.concurrent(medians), numerically_zero(g.concurrency_residuals(medians)));
  medians[2] = g.line_through(g.midpoint(b, c), d);
  EXPECT_EQ(g.concurrent(medians), numerically_zero(g.concurrency_residuals(medians)));

  Scalar r3 = Scalar::variable(s, Session::kSqrt3);
  Point apex{(a.x + b.x) / q(2) - (a.y - b.y) * r3 / q(2), (a.y + b.y) / q(2) + (a.x - b.x) * r3 / q(2)};
  EXPECT_EQ(g.is_equilateral(a, b, apex), numerically_zero(g.equilateral_residuals(a, b, apex)));
  EXPECT_EQ(g.is_equilateral(a, b, c), numerically_zero(g.equilateral_residuals(a, b, c)));

  Scalar c1 = x * x + y * y - u * u;
  Scalar tangent_line = x - u;
  EXPECT_EQ(g.touch_circle_line(c1, tangent_line), numerically_zero({g.touch_circle_line_expr(c1, tangent_line)}));
  EXPECT_EQ(g.touch_circle_line(c1, y - t), numerically_zero({g.touch_circle_line_expr(c1, y - t)}));
  Scalar c2 = x * x + (y - t) * (y - t) - (t - u) * (t - u);
  EXPECT_EQ(g.touch_circles(c1, c2), numerically_zero({g.touch_circles_expr(c1, c2)}));
  Scalar c3 = x * x + (y - t) * (y - t) - u * u;
  EXPECT_EQ(g.touch_circles(c1, c3), numerically_zero({g.touch_circles_expr(c1, c3)}));

  Scalar aa = t * t, bb = u * u;
  EXPECT_EQ(g.sqrt_sum(aa, bb, (t + u) * (t + u)), numerically_zero({g.sqrt_sum_expr(aa, bb, (t + u) * (t + u))}));
  EXPECT_EQ(g.sqrt_sum(aa, bb, t * u), numerically_zero({g.sqrt_sum_expr(aa, bb, t * u)}));
}

}  // namespace
