#pragma once

#include <array>
#include <string>
#include <vector>

#include "planeprover/kernel/scalar.hpp"

namespace planeprover::geometry {

using kernel::Scalar;
using kernel::SessionPtr;
using kernel::Var;

struct Point {
  Scalar x, y;
  friend bool operator==(const Point& a, const Point& b) = default;
  std::string to_string() const { return "[" + x.to_string() + ", " + y.to_string() + "]"; }
};

// Lines are Scalars of degree 1 in x, y ("a*x+b*y+c"); conics are Scalars of
// degree 2. Both may carry parameter-dependent coefficients.
using Line = Scalar;
using Conic = Scalar;

struct Triangle {
  Point a, b, c;
};

// The construction vocabulary over one session. x and y are the session's
// geometric indeterminates. All operations are pure.
class Geometry {
 public:
  explicit Geometry(SessionPtr session);

  const SessionPtr& session() const { return session_; }
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  Point origin() const { return Point{Scalar(0), Scalar(0)}; }

  Scalar area(const Point& a, const Point& b, const Point& c) const;
  Scalar de_sq(const Point& a, const Point& b) const;
  // Throws Errc::shape unless both have `dim` coordinates.
  Scalar de_sq_g(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t dim) const;

  // Exactly area(a, b, [x, y]).
  Line line_through(const Point& a, const Point& b) const;
  // Errc::pole when b.x - a.x vanishes identically.
  Scalar slope(const Point& a, const Point& b) const;
  Point midpoint(const Point& a, const Point& b) const;

  Line altitude(const Point& p, const Line& l) const;
  Point foot(const Point& p, const Line& l) const;
  Line perp_pq(const Point& p, const Point& q) const;
  Line perp_mid(const Point& p, const Point& q) const;
  Point mirror_origin(const Point& a, const Point& b) const;
  // Reflects p across l (translate by -p, reflect the origin, translate back).
  Point mirror_pt_line(const Point& p, const Line& l) const;

  // Clears denominators and solves the 2x2 system. Errc::degenerate_intersection
  // when the determinant vanishes identically.
  Point intersect(const Line& l1, const Line& l2) const;
  std::array<Point, 4> quad(const Line& l1, const Line& l2, const Line& l3, const Line& l4) const;
  // Common point; Errc::no_common_point if some line misses it.
  Point concurrency_point(const std::vector<Line>& lines) const;
  // True iff the linear system in x, y is not inconsistent.
  bool concurrent(const std::vector<Line>& lines) const;
  // Residuals that vanish iff the lines share a point: the remaining lines
  // evaluated at the intersection of the first independent pair.
  std::vector<Scalar> concurrency_residuals(const std::vector<Line>& lines) const;
  // Errc::invalid_argument for fewer than two points.
  bool colinear(const std::vector<Point>& points) const;
  std::vector<Scalar> colinearity_residuals(const std::vector<Point>& points) const;

  // Monic x^2+y^2+a*x+b*y+c through the points (at least 3). Errc::degenerate_circle
  // for colinear points or when extra points miss the circle.
  Conic circle_through(const std::vector<Point>& points) const;
  Point center(const Conic& c) const;
  Scalar radius_sq(const Conic& c) const;
  bool concyclic(const std::vector<Point>& points) const;
  // circle_through(p1, p2, pi) - circle_through(p1, p2, p3) for i >= 4.
  std::vector<Scalar> concyclicity_residuals(const std::vector<Point>& points) const;

  Point circumcenter(const Point& a, const Point& b, const Point& c) const;
  Scalar circumradius_sq(const Point& a, const Point& b, const Point& c) const;
  Conic nine_point_circle(const Point& a, const Point& b, const Point& c) const;
  Line euler_line(const Point& a, const Point& b, const Point& c) const;
  Point centroid(const Point& a, const Point& b, const Point& c) const;
  Point orthocenter(const Point& a, const Point& b, const Point& c) const;
  // Circumcenter of the equilateral triangle erected on a, b.
  Point cet(const Point& a, const Point& b) const;

  Point param_circle(const Point& c, const Scalar& r, const Scalar& t) const;
  Point param_ellipse(const Point& c, const Point& d, const Scalar& t) const;
  Point param_line(const Scalar& m, const Scalar& b, const Scalar& t) const;

  // Errc::not_incident unless p lies on c.
  Line tangent(const Conic& c, const Point& p) const;
  // t is a parameter indeterminate (formal derivative in t) or a constant
  // parameter value.
  Line tangent_to_ellipse(const Point& c, const Point& d, const Scalar& t) const;

  Scalar tc_ces_out(const Point& c1, const Scalar& r1, const Point& c2, const Scalar& r2) const;
  bool touch_circles(const Conic& c1, const Conic& c2) const;
  // Numerator of the tangency discriminant. Errc::unsupported_orientation when
  // the radical line involves neither x nor y.
  Scalar touch_circles_expr(const Conic& c1, const Conic& c2) const;
  bool touch_circle_line(const Conic& c, const Line& l) const;
  Scalar touch_circle_line_expr(const Conic& c, const Line& l) const;

  // tan(a1 + a2 + ...) from the tangents. Errc::pole on a vanishing denominator.
  Scalar tan_sum(const std::vector<Scalar>& args) const;

  Triangle standard_triangle(const Scalar& m, const Scalar& n) const;
  Point incenter(const Scalar& m, const Scalar& n) const;
  // Errc::internal_inconsistency if the three side distances disagree.
  Scalar inradius_sq(const Scalar& m, const Scalar& n) const;
  Conic incircle(const Scalar& m, const Scalar& n) const;

  bool is_equilateral(const Point& a, const Point& b, const Point& c) const;
  std::vector<Scalar> equilateral_residuals(const Point& a, const Point& b, const Point& c) const;
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  bool sqrt_sum(const Scalar& a, const Scalar& b, const Scalar& c) const;
  Scalar sqrt_sum_expr(const Scalar& a, const Scalar& b, const Scalar& c) const;
  Scalar de_pt_line_sq(const Point& p, const Line& l) const;

  // Point substitution helper: s with x -> p.x, y -> p.y.
  Scalar at(const Scalar& s, const Point& p) const;

 private:
  // Splits a line's numerator into a*x + b*y + c (polynomial coefficients).
  std::array<Scalar, 3> line_coefficients(const Line& l) const;
  Scalar solve_for_y_then_discriminant(const Conic& c, const Line& l) const;

  SessionPtr session_;
  Scalar x_, y_;
};

}  // namespace planeprover::geometry
