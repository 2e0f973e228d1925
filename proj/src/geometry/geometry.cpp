#include "planeprover/geometry/geometry.hpp"

#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/linear.hpp"

namespace planeprover::geometry {

using kernel::Poly;
using kernel::Session;

namespace {

Scalar coeff_x(const Scalar& s, unsigned k) { return kernel::coeff(s, Session::kX, k); }
Scalar coeff_y(const Scalar& s, unsigned k) { return kernel::coeff(s, Session::kY, k); }

Scalar half(const Scalar& s) { return s * Scalar(mpq_class(1, 2)); }

}  // namespace

Geometry::Geometry(SessionPtr session)
    : session_(std::move(session)),
      x_(Scalar::variable(session_, Session::kX)),
      y_(Scalar::variable(session_, Session::kY)) {}

Scalar Geometry::at(const Scalar& s, const Point& p) const {
  return kernel::substitute(s, {{Session::kX, p.x}, {Session::kY, p.y}});
}

Scalar Geometry::area(const Point& a, const Point& b, const Point& c) const {
  return half(b.x * c.y - b.y * c.x - a.x * c.y + a.y * c.x - b.x * a.y + b.y * a.x);
}

Scalar Geometry::de_sq(const Point& a, const Point& b) const {
  Scalar dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Scalar Geometry::de_sq_g(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t dim) const {
  if (a.size() != dim || b.size() != dim) {
    throw Error(Errc::shape, "de_sq_g expects points with " + std::to_string(dim) + " coordinates");
  }
  Scalar total;
  for (std::size_t k = 0; k < dim; ++k) {
    Scalar d = a[k] - b[k];
    total += d * d;
  }
  return total;
}

Line Geometry::line_through(const Point& a, const Point& b) const { return area(a, b, Point{x_, y_}); }

Scalar Geometry::slope(const Point& a, const Point& b) const {
  Scalar run = b.x - a.x;
  if (run.is_zero()) throw Error(Errc::pole, "slope of a vertical line");
  return (b.y - a.y) / run;
}

Point Geometry::midpoint(const Point& a, const Point& b) const { return {half(a.x + b.x), half(a.y + b.y)}; }

Line Geometry::altitude(const Point& p, const Line& l) const {
  return coeff_x(l, 1) * (y_ - p.y) - coeff_y(l, 1) * (x_ - p.x);
}

Point Geometry::foot(const Point& p, const Line& l) const { return intersect(altitude(p, l), l); }

Line Geometry::perp_pq(const Point& p, const Point& q) const {
  return (y_ - q.y) * (p.y - q.y) + (x_ - q.x) * (p.x - q.x);
}

Line Geometry::perp_mid(const Point& p, const Point& q) const { return perp_pq(p, midpoint(p, q)); }

Point Geometry::mirror_origin(const Point& a, const Point& b) const {
  Point f = foot(origin(), line_through(a, b));
  return {f.x * 2, f.y * 2};
}

Point Geometry::mirror_pt_line(const Point& p, const Line& l) const {
  Line shifted = kernel::substitute(l, {{Session::kX, x_ + p.x}, {Session::kY, y_ + p.y}});
  Point q = foot(origin(), shifted);
  return {q.x * 2 + p.x, q.y * 2 + p.y};
}

std::array<Scalar, 3> Geometry::line_coefficients(const Line& l) const {
  const Poly& n = l.num();
  for (const auto& t : n.terms()) {
    if (t.mono[Session::kX] + t.mono[Session::kY] > 1) {
      throw Error(Errc::nonlinear_system, "not a line: " + l.to_string());
    }
  }
  return {Scalar(n.coeff(Session::kX, 1)), Scalar(n.coeff(Session::kY, 1)),
          Scalar(n.coeff(Session::kX, 0).coeff(Session::kY, 0))};
}

Point Geometry::intersect(const Line& l1, const Line& l2) const {
  auto [a1, b1, c1] = line_coefficients(l1);
  auto [a2, b2, c2] = line_coefficients(l2);
  Scalar det = a1 * b2 - a2 * b1;
  if (det.is_zero()) {
    throw Error(Errc::degenerate_intersection, "parallel or coincident lines " + l1.to_string() + " and " + l2.to_string());
  }
  return {(b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det};
}

std::array<Point, 4> Geometry::quad(const Line& l1, const Line& l2, const Line& l3, const Line& l4) const {
  return {intersect(l1, l2), intersect(l2, l3), intersect(l3, l4), intersect(l4, l1)};
}

Point Geometry::concurrency_point(const std::vector<Line>& lines) const {
  if (lines.size() < 2) throw Error(Errc::invalid_argument, "concurrency_point needs at least two lines");
  // Find an independent pair, then demand every line pass through its meet.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [a1, b1, c1] = line_coefficients(lines[i]);
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto [a2, b2, c2] = line_coefficients(lines[j]);
      if ((a1 * b2 - a2 * b1).is_zero()) continue;
      Point p = intersect(lines[i], lines[j]);
      for (const Line& l : lines) {
        if (!at(l, p).is_zero()) throw Error(Errc::no_common_point, "line " + l.to_string() + " misses " + p.to_string());
      }
      return p;
    }
  }
  // All lines parallel: either no common point or infinitely many.
  throw Error(kernel::solve_linear(lines, {Session::kX, Session::kY}).status == kernel::SolveStatus::inconsistent
                  ? Errc::no_common_point
                  : Errc::degenerate_intersection,
              "lines are pairwise parallel");
}

bool Geometry::concurrent(const std::vector<Line>& lines) const {
  return kernel::solve_linear(lines, {Session::kX, Session::kY}).status != kernel::SolveStatus::inconsistent;
}

std::vector<Scalar> Geometry::concurrency_residuals(const std::vector<Line>& lines) const {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [a1, b1, c1] = line_coefficients(lines[i]);
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto [a2, b2, c2] = line_coefficients(lines[j]);
      if ((a1 * b2 - a2 * b1).is_zero()) continue;
      Point p = intersect(lines[i], lines[j]);
      std::vector<Scalar> out;
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k != i && k != j) out.push_back(at(lines[k], p));
      }
      return out;
    }
  }
  if (concurrent(lines)) return {};
  return {Scalar(1)};
}

std::vector<Scalar> Geometry::colinearity_residuals(const std::vector<Point>& points) const {
  if (points.size() < 2) throw Error(Errc::invalid_argument, "colinear needs at least two points");
  std::vector<Scalar> out;
  for (std::size_t i = 2; i < points.size(); ++i) out.push_back(area(points[0], points[1], points[i]));
  return out;
}

bool Geometry::colinear(const std::vector<Point>& points) const {
  for (const Scalar& r : colinearity_residuals(points)) {
    if (!r.is_zero()) return false;
  }
  return true;
}

Conic Geometry::circle_through(const std::vector<Point>& points) const {
  if (points.size() < 3) throw Error(Errc::invalid_argument, "circle_through needs at least three points");
  // Work relative to the first point: the circle through the origin
  // X^2 + Y^2 + a'X + b'Y = 0 leaves a 2x2 system.
  const Point& p1 = points[0];
  Scalar u2 = points[1].x - p1.x, v2 = points[1].y - p1.y;
  Scalar u3 = points[2].x - p1.x, v3 = points[2].y - p1.y;
  Scalar w2 = u2 * u2 + v2 * v2, w3 = u3 * u3 + v3 * v3;
  Scalar det = u2 * v3 - u3 * v2;
  if (det.is_zero()) throw Error(Errc::degenerate_circle, "colinear points have no circumcircle");
  Scalar ap = -(w2 * v3 - w3 * v2) / det;
  Scalar bp = -(u2 * w3 - u3 * w2) / det;
  Scalar a = ap - p1.x * 2, b = bp - p1.y * 2;
  Scalar c = p1.x * p1.x + p1.y * p1.y - ap * p1.x - bp * p1.y;
  Conic circle = x_ * x_ + y_ * y_ + a * x_ + b * y_ + c;
  for (std::size_t k = 3; k < points.size(); ++k) {
    if (!at(circle, points[k]).is_zero()) throw Error(Errc::degenerate_circle, "points are not concyclic");
  }
  return circle;
}

Point Geometry::center(const Conic& c) const { return {-half(coeff_x(c, 1)), -half(coeff_y(c, 1))}; }

Scalar Geometry::radius_sq(const Conic& c) const { return at(-c, center(c)); }

std::vector<Scalar> Geometry::concyclicity_residuals(const std::vector<Point>& points) const {
  if (points.size() < 3) throw Error(Errc::invalid_argument, "concyclic needs at least three points");
  Conic first = circle_through({points[0], points[1], points[2]});
  std::vector<Scalar> out;
  for (std::size_t i = 3; i < points.size(); ++i) {
    out.push_back(circle_through({points[0], points[1], points[i]}) - first);
  }
  return out;
}

bool Geometry::concyclic(const std::vector<Point>& points) const {
  for (const Scalar& r : concyclicity_residuals(points)) {
    if (!r.is_zero()) return false;
  }
  return true;
}

Point Geometry::circumcenter(const Point& a, const Point& b, const Point& c) const {
  return center(circle_through({a, b, c}));
}

Scalar Geometry::circumradius_sq(const Point& a, const Point& b, const Point& c) const {
  return radius_sq(circle_through({a, b, c}));
}

Conic Geometry::nine_point_circle(const Point& a, const Point& b, const Point& c) const {
  return circle_through({midpoint(a, b), midpoint(a, c), midpoint(b, c)});
}

Line Geometry::euler_line(const Point& a, const Point& b, const Point& c) const {
  return line_through(orthocenter(a, b, c), circumcenter(a, b, c));
}

Point Geometry::centroid(const Point& a, const Point& b, const Point& c) const {
  return concurrency_point({line_through(midpoint(a, b), c), line_through(midpoint(a, c), b),
                            line_through(midpoint(b, c), a)});
}

Point Geometry::orthocenter(const Point& a, const Point& b, const Point& c) const {
  return concurrency_point({altitude(a, line_through(b, c)), altitude(b, line_through(a, c)),
                            altitude(c, line_through(a, b))});
}

Point Geometry::cet(const Point& a, const Point& b) const {
  Scalar r3 = Scalar::variable(session_, Session::kSqrt3);
  Point apex{half(b.x + a.x) - half((a.y - b.y) * r3), half(b.y) + half((a.x - b.x) * r3) + half(a.y)};
  return circumcenter(a, b, apex);
}

Point Geometry::param_circle(const Point& c, const Scalar& r, const Scalar& t) const {
  return param_ellipse(c, Point{r, r}, t);
}

Point Geometry::param_ellipse(const Point& c, const Point& d, const Scalar& t) const {
  Scalar i = Scalar::variable(session_, Session::kI);
  Scalar inv = Scalar(1) / t;
  return {c.x + half(d.x * (t + inv)), c.y + half(d.y * (t - inv)) / i};
}

Point Geometry::param_line(const Scalar& m, const Scalar& b, const Scalar& t) const { return {t, m * t + b}; }

Line Geometry::tangent(const Conic& c, const Point& p) const {
  if (!at(c, p).is_zero()) throw Error(Errc::not_incident, p.to_string() + " is not on " + c.to_string());
  Scalar a = coeff_x(c, 2);
  Scalar form = (y_ - p.y) * (a * p.y * 2 + coeff_y(c, 1)) + (x_ - p.x) * (a * p.x * 2 + coeff_x(c, 1));
  return Scalar(form.num());
}

Line Geometry::tangent_to_ellipse(const Point& c, const Point& d, const Scalar& t) const {
  Point p = param_ellipse(c, d, t);
  const auto& terms = t.num().terms();
  const bool indeterminate = t.is_polynomial() && terms.size() == 1 && terms[0].mono.deg == 1 &&
                             terms[0].coeff == 1 && !t.has_generators();
  if (!indeterminate) {
    if (!t.is_constant()) {
      throw Error(Errc::invalid_argument, "tangent_to_ellipse needs a parameter or a constant, got " + t.to_string());
    }
    // A constant parameter value: use the derivative of the parametrization.
    Scalar i = Scalar::variable(session_, Session::kI);
    Scalar inv_sq = Scalar(1) / (t * t);
    Scalar dx = half(d.x * (Scalar(1) - inv_sq)), dy = half(d.y * (Scalar(1) + inv_sq)) / i;
    return dx * (y_ - p.y) - (x_ - p.x) * dy;
  }
  Var v{0};
  for (std::size_t k = 0; k < kernel::kMaxVars; ++k) {
    if (terms[0].mono.exp[k]) v = Var{static_cast<std::uint8_t>(k)};
  }
  if (v == Session::kX || v == Session::kY) {
    throw Error(Errc::invalid_argument, "tangent_to_ellipse parameter must not be x or y");
  }
  return kernel::derivative(p.x, v) * (y_ - p.y) - (x_ - p.x) * kernel::derivative(p.y, v);
}

Scalar Geometry::tc_ces_out(const Point& c1, const Scalar& r1, const Point& c2, const Scalar& r2) const {
  Scalar s = r1 + r2;
  return s * s - de_sq(c1, c2);
}

Scalar Geometry::solve_for_y_then_discriminant(const Conic& c, const Line& l) const {
  auto [a, b, k] = line_coefficients(l);
  Scalar reduced;
  Var along = Session::kX;
  if (!b.is_zero()) {
    reduced = kernel::substitute(c, {{Session::kY, -(a * x_ + k) / b}});
  } else if (!a.is_zero()) {
    reduced = kernel::substitute(c, {{Session::kX, -(b * y_ + k) / a}});
    along = Session::kY;
  } else {
    throw Error(Errc::unsupported_orientation, "radical line involves neither x nor y");
  }
  Scalar q2 = kernel::coeff(reduced, along, 2), q1 = kernel::coeff(reduced, along, 1),
         q0 = kernel::coeff(reduced, along, 0);
  Scalar disc = q2 * q0 * 4 - q1 * q1;
  return Scalar(disc.num());
}

Scalar Geometry::touch_circles_expr(const Conic& c1, const Conic& c2) const {
  return solve_for_y_then_discriminant(c1, c1 - c2);
}

bool Geometry::touch_circles(const Conic& c1, const Conic& c2) const { return touch_circles_expr(c1, c2).is_zero(); }

Scalar Geometry::touch_circle_line_expr(const Conic& c, const Line& l) const {
  return solve_for_y_then_discriminant(c, l);
}

bool Geometry::touch_circle_line(const Conic& c, const Line& l) const { return touch_circle_line_expr(c, l).is_zero(); }

Scalar Geometry::tan_sum(const std::vector<Scalar>& args) const {
  if (args.empty()) throw Error(Errc::invalid_argument, "tan_sum needs at least one argument");
  Scalar acc = args.back();
  for (std::size_t k = args.size() - 1; k-- > 0;) {
    Scalar den = Scalar(1) - args[k] * acc;
    if (den.is_zero()) throw Error(Errc::pole, "tan_sum denominator vanishes");
    acc = (args[k] + acc) / den;
  }
  return acc;
}

Triangle Geometry::standard_triangle(const Scalar& m, const Scalar& n) const {
  Point apex = intersect(y_ - tan_sum({m, m}) * x_, y_ + tan_sum({n, n}) * (x_ - 1));
  return {origin(), Point{Scalar(1), Scalar(0)}, apex};
}

Point Geometry::incenter(const Scalar& m, const Scalar& n) const {
  if (m == n) return {Scalar(mpq_class(1, 2)), half(m)};
  Point c = standard_triangle(m, n).c;
  return concurrency_point({y_ - m * x_, y_ + n * x_ - n, y_ - c.y - (x_ - c.x) * tan_sum({m, Scalar(1) / n})});
}

Scalar Geometry::inradius_sq(const Scalar& m, const Scalar& n) const {
  Triangle t = standard_triangle(m, n);
  Point o = incenter(m, n);
  Scalar d1 = de_pt_line_sq(o, line_through(t.a, t.b));
  Scalar d2 = de_pt_line_sq(o, line_through(t.a, t.c));
  Scalar d3 = de_pt_line_sq(o, line_through(t.b, t.c));
  if (!(d1 == d2) || !(d1 == d3)) {
    throw Error(Errc::internal_inconsistency, "incenter is not equidistant from the sides");
  }
  return d1;
}

Conic Geometry::incircle(const Scalar& m, const Scalar& n) const {
  Point o = incenter(m, n);
  Scalar dx = x_ - o.x, dy = y_ - o.y;
  return dx * dx + dy * dy - inradius_sq(m, n);
}

std::vector<Scalar> Geometry::equilateral_residuals(const Point& a, const Point& b, const Point& c) const {
  return {de_sq(a, b) - de_sq(a, c), de_sq(b, c) - de_sq(c, a)};
}

bool Geometry::is_equilateral(const Point& a, const Point& b, const Point& c) const {
  for (const Scalar& r : equilateral_residuals(a, b, c)) {
    if (!r.is_zero()) return false;
  }
  return true;
}

Scalar Geometry::sqrt_sum_expr(const Scalar& a, const Scalar& b, const Scalar& c) const {
  Scalar d = c - a - b;
  return d * d - a * b * 4;
}

bool Geometry::sqrt_sum(const Scalar& a, const Scalar& b, const Scalar& c) const {
  return sqrt_sum_expr(a, b, c).is_zero();
}

Scalar Geometry::de_pt_line_sq(const Point& p, const Line& l) const { return de_sq(foot(p, l), p); }

}  // namespace planeprover::geometry
