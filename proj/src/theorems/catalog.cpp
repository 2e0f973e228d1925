#include <algorithm>

#include "planeprover/groebner/groebner.hpp"
#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/linear.hpp"
#include "planeprover/kernel/numeric.hpp"
#include "planeprover/theorems/theorems.hpp"

namespace planeprover::theorems {

using geometry::Line;
using kernel::Session;
using kernel::Var;

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }
Point pt(long a, long b) { return {q(a), q(b)}; }

Claim identity(const Scalar& lhs, const Scalar& rhs) {
  return Claim{ClaimKind::zero_identity, {lhs - rhs}, {lhs, rhs}, std::nullopt};
}

std::vector<Scalar> coords(std::initializer_list<Point> points) {
  std::vector<Scalar> out;
  for (const Point& p : points) {
    out.push_back(p.x);
    out.push_back(p.y);
  }
  return out;
}

Claim colinear(Builder& b, const std::vector<Point>& points) {
  Claim c{ClaimKind::colinearity, b.geo().colinearity_residuals(points), {}, std::nullopt};
  for (const Point& p : points) {
    c.subjects.push_back(p.x);
    c.subjects.push_back(p.y);
  }
  return c;
}

Claim concurrent(Builder& b, const std::vector<Line>& lines) {
  return Claim{ClaimKind::concurrency, b.geo().concurrency_residuals(lines), lines, std::nullopt};
}

Claim equilateral(Builder& b, const Point& p, const Point& q2, const Point& r) {
  return Claim{ClaimKind::equilaterality, b.geo().equilateral_residuals(p, q2, r), coords({p, q2, r}), std::nullopt};
}

// ---------------------------------------------------------------------------

Claim area_formula(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  Point F = b.tweak(0, g.foot(C, g.line_through(A, B)));
  b.trace("foot", F);
  Scalar area = b.tweak(1, g.area(A, B, C));
  return identity(g.de_sq(A, B) * g.de_sq(C, F) / q(4), area * area);
}

Claim brianchon(Builder& b) {
  const Geometry& g = b.geo();
  Point c = b.point("c"), d = b.point("d");
  std::vector<Line> tangents;
  for (int i = 0; i < 6; ++i) tangents.push_back(g.tangent_to_ellipse(c, d, b.param("t" + std::to_string(i))));
  std::vector<Point> P;
  for (int i = 0; i < 6; ++i) {
    P.push_back(g.intersect(tangents[i], tangents[(i + 1) % 6]));
    b.trace("P" + std::to_string(i), P.back());
  }
  P[0] = b.tweak(0, P[0]);
  return concurrent(b, {g.line_through(P[0], P[3]), g.line_through(P[1], P[4]), g.line_through(P[2], P[5])});
}

Claim butterfly(Builder& b) {
  const Geometry& g = b.geo();
  Scalar R = b.param("R");
  std::vector<Point> P;
  for (int i = 1; i <= 4; ++i) P.push_back(g.param_circle(g.origin(), R, b.param("t" + std::to_string(i))));
  Point M = g.intersect(g.line_through(P[0], P[2]), g.line_through(P[1], P[3]));
  Line chord = g.perp_pq(g.origin(), M);
  Point X = b.tweak(0, g.intersect(g.line_through(P[0], P[3]), chord));
  Point Y = g.intersect(g.line_through(P[1], P[2]), chord);
  b.trace("M", M);
  b.trace("X", X);
  b.trace("Y", Y);
  return identity(g.de_sq(M, X), g.de_sq(M, Y));
}

Claim centroid_exists(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  return concurrent(b, {g.line_through(g.midpoint(A, B), b.tweak(0, C)), g.line_through(g.midpoint(A, C), B),
                        g.line_through(g.midpoint(B, C), A)});
}

Claim ceva(Builder& b) {
  const Geometry& g = b.geo();
  Point A = pt(0, 0), B = pt(1, 0), C = b.point("C"), O = b.point("O");
  Point D = g.intersect(g.line_through(B, C), g.line_through(A, O));
  Point E = g.intersect(g.line_through(A, C), g.line_through(B, O));
  Point F = b.tweak(0, g.intersect(g.line_through(A, B), g.line_through(C, O)));
  b.trace("D", D);
  b.trace("E", E);
  b.trace("F", F);
  return identity(g.de_sq(B, D) * g.de_sq(C, E) * g.de_sq(A, F), g.de_sq(D, C) * g.de_sq(E, A) * g.de_sq(F, B));
}

Claim desargues(Builder& b) {
  const Geometry& g = b.geo();
  std::vector<Point> A, B;
  for (int i = 1; i <= 3; ++i) {
    std::string k = std::to_string(i);
    A.push_back(g.param_line(b.param("m" + k), q(0), b.param("t" + k)));
    B.push_back(g.param_line(b.param("m" + k), q(0), b.param("s" + k)));
  }
  auto meet = [&](int i, int j) {
    return g.intersect(g.line_through(A[i], A[j]), g.line_through(B[i], B[j]));
  };
  return colinear(b, {meet(0, 1), meet(0, 2), b.tweak(0, meet(1, 2))});
}

Claim euler_line_exists(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  Point H = g.orthocenter(A, B, C), O = g.circumcenter(A, B, C), G = b.tweak(0, g.centroid(A, B, C));
  b.trace("orthocenter", H);
  b.trace("circumcenter", O);
  b.trace("centroid", G);
  return colinear(b, {H, O, G});
}

Claim euler_tetrahedron(Builder& b) {
  const Geometry& g = b.geo();
  Scalar p31 = b.param("p31"), p32 = b.param("p32"), p41 = b.param("p41"), p42 = b.param("p42"),
         p43 = b.param("p43");
  std::vector<Scalar> P1{q(0), q(0), q(0)}, P2{q(1), q(0), q(0)}, P3{p31, p32, q(0)}, P4{p41, p42, p43};
  Scalar P = g.de_sq_g(P1, P4, 3), Q = g.de_sq_g(P2, P4, 3), R = g.de_sq_g(P3, P4, 3);
  Scalar A = b.tweak(0, g.de_sq_g(P2, P3, 3)), B = g.de_sq_g(P3, P1, 3), C = g.de_sq_g(P1, P2, 3);
  Scalar vol = g.area(Point{p31, p32}, pt(1, 0), pt(0, 0)) * p43 / q(3);
  kernel::Matrix cayley_menger{{0, P, Q, R, 1}, {P, 0, C, B, 1}, {Q, C, 0, A, 1}, {R, B, A, 0, 1}, {1, 1, 1, 1, 0}};
  Scalar det = kernel::determinant(cayley_menger);
  b.trace("det", det);
  b.trace("Vol", vol);
  Claim c = identity(det / (vol * vol) / q(288), q(1));
  c.subjects = {det, vol};
  return c;
}

Claim euler_triangle_formula(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m"), n = b.param("n");
  auto T = g.standard_triangle(m, n);
  Point O = g.incenter(m, n), I1 = g.circumcenter(T.a, T.b, T.c);
  Scalar r_sq = g.inradius_sq(m, n), R_sq = g.circumradius_sq(T.a, T.b, T.c);
  Scalar d_sq = b.tweak(0, g.de_sq(O, I1));
  b.trace("incenter", O);
  b.trace("circumcenter", I1);
  Scalar lhs = (d_sq - R_sq) * (d_sq - R_sq);
  return identity(lhs, r_sq * R_sq * q(4));
}

Claim feuerbach(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m"), n = b.param("n");
  auto T = g.standard_triangle(m, n);
  Scalar nine = g.nine_point_circle(T.a, T.b, T.c);
  nine = b.tweak(1, nine) + (b.tweak(2, q(0)) * b.x());
  Scalar in = b.tweak(0, g.incircle(m, n));
  b.trace("nine_point_circle", nine);
  b.trace("incircle", in);
  Scalar expr = g.touch_circles_expr(nine, in);
  return Claim{ClaimKind::tangency, {expr}, {nine, in}, std::nullopt};
}

Claim fox_talbot(Builder& b) {
  const Geometry& g = b.geo();
  std::vector<Line> L{b.x()};
  for (int i = 2; i <= 5; ++i) {
    std::string k = std::to_string(i);
    L.push_back(b.param("a" + k) * b.x() + b.param("b" + k) * b.y() + b.param("c" + k));
  }
  std::vector<Line> M;
  for (int i = 0; i < 5; ++i) {
    std::vector<Line> rest;
    for (int j = 0; j < 5; ++j) {
      if (j != i) rest.push_back(L[j]);
    }
    auto qd = g.quad(rest[0], rest[1], rest[2], rest[3]);
    M.push_back(g.line_through(g.midpoint(qd[0], qd[2]), g.midpoint(qd[1], qd[3])));
    b.trace("M" + std::to_string(i + 1), M.back());
  }
  M[4] = b.tweak(0, M[4], true);
  return concurrent(b, M);
}

Claim herron(Builder& b) {
  const Geometry& g = b.geo();
  Point A = pt(0, 0), B{q(0), b.param("b1")}, C{b.param("a2"), b.param("b2")};
  Scalar a = kernel::adjoin_sqrt(g.de_sq(B, C), b.session());
  Scalar bb = kernel::adjoin_sqrt(g.de_sq(A, C), b.session());
  Scalar c = kernel::adjoin_sqrt(g.de_sq(A, B), b.session());
  Scalar s = b.tweak(0, (a + bb + c) / q(2), true);
  Scalar heron = s * (s - a) * (s - bb) * (s - c);
  b.trace("s(s-a)(s-b)(s-c)", heron);
  Scalar area = g.area(A, B, C);
  return identity(area * area, heron);
}

Claim incenter_exists(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m"), n = b.param("n");
  Point C = b.tweak(0, g.standard_triangle(m, n).c);
  Scalar x = b.x(), y = b.y();
  return concurrent(b, {y - m * x, y + n * x - n, y - C.y - (x - C.x) * g.tan_sum({m, Scalar(1) / n})});
}

Claim johnson(Builder& b) {
  const Geometry& g = b.geo();
  Scalar R = b.param("R");
  std::vector<Point> C, P;
  for (int i = 0; i < 3; ++i) C.push_back(g.param_circle(g.origin(), R, b.param("t" + std::to_string(i))));
  for (int i = 0; i < 3; ++i) {
    P.push_back(g.mirror_origin(C[i], C[(i + 1) % 3]));
    b.trace("P" + std::to_string(i), P.back());
  }
  P[0] = b.tweak(0, P[0]);
  return identity(g.radius_sq(g.circle_through({P[0], P[1], P[2]})), R * R);
}

Claim lehmus(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m");
  // The numeric oracle checks the claim on the diagonal n = m.
  Scalar n = b.numeric() ? m : b.param("n");
  Scalar x = b.x(), y = b.y();
  Point N = b.tweak(0, g.intersect(y - g.tan_sum({m, m}) * x, y + n * (x - 1)));
  Point M = b.tweak(1, g.intersect(y - m * x, y + g.tan_sum({n, n}) * (x - 1)));
  b.trace("N", N);
  b.trace("M", M);
  Scalar diff = b.tweak(2, g.de_sq(pt(1, 0), N) - g.de_sq(pt(0, 0), M), true);
  Scalar numer(diff.num());
  Claim c{ClaimKind::certificate, {}, {numer}, std::nullopt};
  if (b.numeric()) {
    c.residuals = {numer};
    return c;
  }
  Var mv = b.session()->parameter("m"), nv = b.session()->parameter("n");
  c.residuals = {kernel::substitute(numer, {{nv, m}})};
  if (!c.residuals[0].is_zero()) return c;
  Scalar divisor = m - n;
  Scalar cofactor = kernel::divide_exact(numer, divisor);
  Certificate cert;
  cert.numerator = numer.to_string();
  cert.divisor = divisor.to_string();
  cert.cofactor = cofactor.to_string();
  cert.semi_rigorous = true;
  std::mt19937_64 rng(20260518);
  std::uniform_int_distribution<long> unit(1, 99);
  while (cert.evidence.size() < 8) {
    mpq_class mq(unit(rng), 100), nq(unit(rng), 100);
    mq.canonicalize();
    nq.canonicalize();
    kernel::Value v = kernel::eval_at(cofactor, {{mv, mq}, {nv, nq}});
    if (v.is_zero()) {
      c.residuals.push_back(Scalar(1));
      break;
    }
    cert.evidence.emplace_back("m=" + kernel::format_rational(mq) + ", n=" + kernel::format_rational(nq),
                               v.to_string());
  }
  c.certificate = std::move(cert);
  return c;
}

Claim menelaus(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  Line L = b.y() - b.param("m") * b.x() - b.param("b");
  Point X = b.tweak(0, g.intersect(g.line_through(B, C), L));
  Point Y = g.intersect(g.line_through(A, C), L);
  Point Z = g.intersect(g.line_through(A, B), L);
  b.trace("X", X);
  b.trace("Y", Y);
  b.trace("Z", Z);
  return identity(g.de_sq(B, X) * g.de_sq(C, Y) * g.de_sq(A, Z), g.de_sq(C, X) * g.de_sq(A, Y) * g.de_sq(B, Z));
}

Claim morley(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m"), n = b.param("n"), x = b.x(), y = b.y();
  Scalar r3 = Scalar::variable(b.session(), Session::kSqrt3);
  Point C = g.intersect(y - g.tan_sum({m, m, m}) * x, y + g.tan_sum({n, n, n}) * (x - 1));
  Point D = b.tweak(0, g.intersect(y - m * x, y + n * x - n));
  Point E = g.intersect(y - g.tan_sum({m, m}) * x, y - C.y - (x - C.x) * g.tan_sum({m, m, -n, r3}));
  Point F = g.intersect(y + g.tan_sum({n, n}) * (x - 1), y - C.y + (x - C.x) * g.tan_sum({n, n, -m, r3}));
  b.trace("C", C);
  b.trace("D", D);
  b.trace("E", E);
  b.trace("F", F);
  return equilateral(b, D, E, F);
}

Claim napoleon(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  Point P = b.tweak(0, g.cet(A, B)), Q = g.cet(B, C), R = g.cet(C, A);
  Q = {Q.x, b.tweak(1, Q.y)};
  b.trace("CET(A,B)", P);
  b.trace("CET(B,C)", Q);
  b.trace("CET(C,A)", R);
  return equilateral(b, P, Q, R);
}

Claim nine_point_circle_exists(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  Point D = b.tweak(0, g.foot(A, g.line_through(B, C)));
  Point E = g.foot(B, g.line_through(A, C));
  Point F = g.foot(C, g.line_through(A, B));
  Point G = g.midpoint(A, B), H = b.tweak(1, g.midpoint(A, C)), I = g.midpoint(B, C);
  Point O = g.orthocenter(A, B, C);
  Point K = b.tweak(2, g.midpoint(O, A)), L = g.midpoint(O, B), M = g.midpoint(O, C);
  b.trace("orthocenter", O);
  std::vector<Point> all{D, E, F, G, H, I, K, L, M};
  Claim c{ClaimKind::concyclicity, g.concyclicity_residuals(all), {}, std::nullopt};
  for (const Point& p : all) {
    c.subjects.push_back(p.x);
    c.subjects.push_back(p.y);
  }
  return c;
}

Claim orthocenter_exists(Builder& b) {
  const Geometry& g = b.geo();
  Point A = b.point("A"), B = b.point("B"), C = b.point("C");
  return concurrent(b, {g.altitude(b.tweak(0, A), g.line_through(B, C)), g.altitude(B, g.line_through(A, C)),
                        g.altitude(C, g.line_through(A, B))});
}

// Pappus and Pascal share the hexagon pattern on two triples.
Claim hexagon(Builder& b, const std::vector<Point>& P, const std::vector<Point>& Q) {
  const Geometry& g = b.geo();
  auto cross = [&](int i, int j) {
    return g.intersect(g.line_through(P[i], Q[j]), g.line_through(P[j], Q[i]));
  };
  Point X = cross(0, 1), Y = cross(0, 2), Z = b.tweak(0, cross(1, 2));
  b.trace("X", X);
  b.trace("Y", Y);
  b.trace("Z", Z);
  return colinear(b, {X, Y, Z});
}

Claim pappus(Builder& b) {
  const Geometry& g = b.geo();
  Scalar m = b.param("m"), k = b.param("b"), m1 = b.param("m1"), k1 = b.param("b1");
  std::vector<Point> P, Q;
  for (int i = 1; i <= 3; ++i) {
    P.push_back(g.param_line(m, k, b.param("t" + std::to_string(i))));
    Q.push_back(g.param_line(m1, k1, b.param("s" + std::to_string(i))));
  }
  return hexagon(b, P, Q);
}

Claim pascal(Builder& b) {
  const Geometry& g = b.geo();
  Point c = b.point("c"), d = b.point("d");
  std::vector<Point> P, Q;
  for (int i = 1; i <= 3; ++i) {
    P.push_back(g.param_ellipse(c, d, b.param("t" + std::to_string(i))));
    Q.push_back(g.param_ellipse(c, d, b.param("s" + std::to_string(i))));
  }
  return hexagon(b, P, Q);
}

Claim ptolemy(Builder& b) {
  const Geometry& g = b.geo();
  Scalar R = b.param("R");
  std::vector<Point> P;
  for (int i = 1; i <= 4; ++i) P.push_back(g.param_circle(g.origin(), R, b.param("t" + std::to_string(i))));
  P[3] = b.tweak(0, P[3]);
  Scalar u = g.de_sq(P[0], P[1]) * g.de_sq(P[2], P[3]);
  Scalar v = g.de_sq(P[1], P[2]) * g.de_sq(P[3], P[0]);
  Scalar w = g.de_sq(P[0], P[2]) * g.de_sq(P[1], P[3]);
  Claim c{ClaimKind::zero_identity, {g.sqrt_sum_expr(u, v, w)}, {u, v, w}, std::nullopt};
  return c;
}

Claim simson(Builder& b) {
  const Geometry& g = b.geo();
  Scalar R = b.param("R");
  std::vector<Point> P;
  for (int i = 1; i <= 4; ++i) P.push_back(g.param_circle(g.origin(), R, b.param("t" + std::to_string(i))));
  Point X = g.foot(P[3], g.line_through(P[0], P[1]));
  Point Y = b.tweak(0, g.foot(P[3], g.line_through(P[1], P[2])));
  Point Z = g.foot(P[3], g.line_through(P[2], P[0]));
  b.trace("X", X);
  b.trace("Y", Y);
  b.trace("Z", Z);
  return colinear(b, {X, Y, Z});
}

// Descartes' relation for four mutually tangent circles. Symbolically: the
// numerator lies in the ideal of the six tangency conditions. Numerically: a
// concrete configuration is solved with r, s random and t a root of the
// remaining quadratic, then every condition and the relation are evaluated.
Claim soddy(Builder& b) {
  const Geometry& g = b.geo();
  const SessionPtr& s = b.session();
  Point O = pt(0, 0);
  Scalar one = q(1);
  auto descartes = [&](const Scalar& r, const Scalar& sv, const Scalar& t) {
    Scalar e1 = Scalar(1) / b.tweak(1, r, true), e2 = Scalar(1) / sv, e3 = Scalar(1) / t;
    Scalar e4 = b.tweak(0, Scalar(1) / one, true);
    Scalar sum = e1 + e2 + e3 + e4;
    Scalar two = b.tweak(2, q(2), true);
    return Scalar((sum * sum - (e1 * e1 + e2 * e2 + e3 * e3 + e4 * e4) * two).num());
  };

  if (!b.numeric()) {
    Scalar r = b.param("r"), sv = b.param("s"), t = b.param("t");
    Point d = b.point("d"), e = b.point("e");
    Point c{r + one, q(0)};
    std::vector<Scalar> tc{g.tc_ces_out(c, r, d, sv), g.tc_ces_out(c, r, e, t), g.tc_ces_out(d, sv, e, t),
                           g.tc_ces_out(O, one, c, r), g.tc_ces_out(O, one, d, sv), g.tc_ces_out(O, one, e, t)};
    std::vector<kernel::Poly> gens;
    for (const Scalar& p : tc) gens.push_back(p.num());
    auto var = [&](const std::string& name) { return s->parameter(name); };
    groebner::MonomialOrder order{{var("d1"), var("e1"), var("d2"), var("e2"), var("r"), var("s"), var("t")}};
    groebner::GroebnerBasis gb = groebner::buchberger(gens, order);
    b.trace("basis size", Scalar(static_cast<long>(gb.basis.size())));
    Scalar p = descartes(r, sv, t);
    b.trace("p", p);
    Claim claim{ClaimKind::groebner_zero, {Scalar(groebner::normal_form(p.num(), gb))}, {p}, std::nullopt};
    for (const auto& gen : gens) claim.residuals.push_back(Scalar(groebner::normal_form(gen, gb)));
    return claim;
  }

  Scalar r = b.param("r"), sv = b.param("s");
  Scalar c1 = r + one;
  auto sq = [](const Scalar& v) { return v * v; };
  // Tangency to the unit circle and to c reduces to a linear equation in the first coordinate.
  auto first_coord = [&](const Scalar& radius) {
    return (sq(c1) - sq(r + radius) + sq(one + radius)) / (c1 * q(2));
  };
  auto root = [&](const Scalar& radicand) {
    if (radicand.is_zero()) throw Error(Errc::pole, "degenerate sample");
    return kernel::adjoin_sqrt(radicand, s);
  };
  Scalar d1 = first_coord(sv);
  Scalar d2_sq = sq(one + sv) - sq(d1);
  Scalar d2 = root(d2_sq);
  // e depends on t through e1(t) linearly; tangency to d leaves a quadratic in t.
  Var tvar = s->fresh_parameter("t");
  Scalar tv = Scalar::variable(s, tvar);
  Scalar e1t = first_coord(tv);
  Scalar kt = sq(one + sv) + sq(one + tv) - sq(sv + tv) - d1 * e1t * q(2);
  Scalar quadratic = sq(kt) - d2_sq * q(4) * (sq(one + tv) - sq(e1t));
  Scalar a2 = kernel::coeff(quadratic, tvar, 2), a1 = kernel::coeff(quadratic, tvar, 1),
         a0 = kernel::coeff(quadratic, tvar, 0);
  if (a2.is_zero()) throw Error(Errc::pole, "degenerate sample");
  Scalar disc = sq(a1) - a2 * a0 * q(4);
  Scalar t = (disc.is_zero() ? -a1 : root(disc) - a1) / (a2 * q(2));
  if (t.is_zero()) throw Error(Errc::pole, "degenerate sample");
  Scalar e1 = kernel::substitute(e1t, {{tvar, t}});
  Scalar e2 = kernel::substitute(kt, {{tvar, t}}) / (d2 * q(2));
  Point c{c1, q(0)}, d{d1, d2}, e{e1, e2};
  Claim claim{ClaimKind::groebner_zero, {}, {}, std::nullopt};
  claim.residuals = {g.tc_ces_out(c, r, d, sv), g.tc_ces_out(c, r, e, t), g.tc_ces_out(d, sv, e, t),
                     g.tc_ces_out(O, one, c, r), g.tc_ces_out(O, one, d, sv), g.tc_ces_out(O, one, e, t)};
  claim.residuals.push_back(kernel::substitute(descartes(r, sv, tv), {{tvar, t}}));
  return claim;
}

std::vector<TheoremRecord> build_catalog() {
  using K = ClaimKind;
  using V = Verdict;
  return {
      {"AreaFormula", "Base times height over two is the area", K::zero_identity, V::proved, area_formula, 2},
      {"Brianchon", "Diagonals of a hexagon circumscribed about a conic are concurrent", K::concurrency, V::proved,
       brianchon, 1},
      {"Butterfly", "Butterfly theorem", K::zero_identity, V::proved, butterfly, 1},
      {"CentroidExists", "The medians of a triangle are concurrent", K::concurrency, V::proved, centroid_exists, 1},
      {"Ceva", "Ceva's theorem", K::zero_identity, V::proved, ceva, 1},
      {"Desargues", "Desargues' theorem", K::colinearity, V::proved, desargues, 1},
      {"EulerLineExists", "Orthocenter, circumcenter and centroid are colinear", K::colinearity, V::proved,
       euler_line_exists, 1},
      {"EulerTetrahedronVolumeFormula", "Volume of a tetrahedron from its edge lengths", K::zero_identity, V::proved,
       euler_tetrahedron, 1},
      {"EulerTriangleFormula", "Distance between incenter and circumcenter", K::zero_identity, V::proved,
       euler_triangle_formula, 1},
      {"Feuerbach", "The nine-point circle touches the incircle", K::tangency, V::proved, feuerbach, 3},
      {"FoxTalbot", "Midpoint lines of the quadrilaterals of five lines are concurrent", K::concurrency, V::proved,
       fox_talbot, 1},
      {"Herron", "Heron's formula", K::zero_identity, V::proved, herron, 1},
      {"IncenterExists", "The angle bisectors of a triangle are concurrent", K::concurrency, V::proved,
       incenter_exists, 1},
      {"Johnson", "Johnson's three equal circles", K::zero_identity, V::proved, johnson, 1},
      {"Lehmus", "Steiner-Lehmus: equal bisectors force an isosceles triangle", K::certificate, V::certificate,
       lehmus, 3},
      {"Menelaus", "Menelaus' theorem", K::zero_identity, V::proved, menelaus, 1},
      {"Morley", "Morley's trisector theorem", K::equilaterality, V::proved, morley, 1},
      {"Napoleon", "Napoleon's theorem", K::equilaterality, V::proved, napoleon, 2},
      {"NinePointCircleExists", "Feet, midpoints and orthocenter midpoints are concyclic", K::concyclicity,
       V::proved, nine_point_circle_exists, 3},
      {"OrthocenterExists", "The altitudes of a triangle are concurrent", K::concurrency, V::proved,
       orthocenter_exists, 1},
      {"Pappus", "Pappus' hexagon theorem", K::colinearity, V::proved, pappus, 1},
      {"Pascal", "Pascal's hexagon theorem", K::colinearity, V::proved, pascal, 1},
      {"Ptolemy", "Ptolemy's theorem", K::zero_identity, V::proved, ptolemy, 1},
      {"Simson", "The Simson line", K::colinearity, V::proved, simson, 1},
      {"Soddy", "Descartes' kissing circles relation", K::groebner_zero, V::proved, soddy, 3},
  };
}

}  // namespace

const std::vector<TheoremRecord>& catalog() {
  static const std::vector<TheoremRecord> records = build_catalog();
  return records;
}

const TheoremRecord& find(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw Error(Errc::not_found, "no theorem named " + std::string(id));
}

std::vector<Mutation> mutations() {
  std::vector<Mutation> out;
  for (const auto& r : catalog()) {
    for (int site = 0; site < r.mutation_sites; ++site) out.push_back({r.id, site});
  }
  return out;
}

}  // namespace planeprover::theorems
