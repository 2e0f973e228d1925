#include <functional>
#include <map>

#include "planeprover/kernel/errors.hpp"
#include "value.hpp"

namespace planeprover::cli {

using geometry::Geometry;
using theorems::ClaimKind;

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.items_ = std::move(items);
  return v;
}

const Scalar& Value::scalar(std::string_view what) const {
  if (!scalar_) throw Error(Errc::type, std::string(what) + " must be a scalar, got a tuple of " +
                                            std::to_string(items_.size()));
  return *scalar_;
}

Point Value::point(std::string_view what) const {
  if (scalar_ || items_.size() != 2 || !items_[0].is_scalar() || !items_[1].is_scalar()) {
    throw Error(Errc::type, std::string(what) + " must be a point [x, y]");
  }
  return Point{*items_[0].scalar_, *items_[1].scalar_};
}

std::vector<Scalar> Value::flatten() const {
  if (scalar_) return {*scalar_};
  std::vector<Scalar> out;
  for (const Value& v : items_) {
    auto part = v.flatten();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string Value::to_string() const {
  if (scalar_) return scalar_->to_string();
  std::string out = "[";
  for (std::size_t k = 0; k < items_.size(); ++k) out += (k ? ", " : "") + items_[k].to_string();
  return out + "]";
}

namespace {

// Argument views with positional error messages.
class Args {
 public:
  Args(std::string_view name, const std::vector<Value>& args) : name_(name), args_(args) {}

  std::size_t size() const { return args_.size(); }
  const Value& operator[](std::size_t k) const { return args_[k]; }
  const Scalar& s(std::size_t k) const { return args_[k].scalar(label(k)); }
  Point p(std::size_t k) const { return args_[k].point(label(k)); }
  std::vector<Scalar> scalars() const {
    std::vector<Scalar> out;
    for (std::size_t k = 0; k < args_.size(); ++k) out.push_back(s(k));
    return out;
  }
  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t k = 0; k < args_.size(); ++k) out.push_back(p(k));
    return out;
  }

 private:
  std::string label(std::size_t k) const { return "argument " + std::to_string(k + 1) + " of " + std::string(name_); }

  std::string_view name_;
  const std::vector<Value>& args_;
};

Value points(const std::vector<Point>& ps) {
  std::vector<Value> items(ps.begin(), ps.end());
  return Value::tuple(std::move(items));
}

std::vector<Scalar> coords(const std::vector<Point>& ps) {
  std::vector<Scalar> out;
  for (const Point& p : ps) {
    out.push_back(p.x);
    out.push_back(p.y);
  }
  return out;
}

// Substitutes p for (x, y) in every component.
Value at(const Geometry& g, const Value& v, const Point& p) {
  if (v.is_scalar()) return g.at(v.scalar("value"), p);
  std::vector<Value> items;
  for (const Value& item : v.items()) items.push_back(at(g, item, p));
  return Value::tuple(std::move(items));
}

std::vector<Scalar> tuple_scalars(const Value& v, std::string_view what) {
  if (v.is_scalar()) throw Error(Errc::type, std::string(what) + " must be a tuple of scalars");
  std::vector<Scalar> out;
  for (const Value& item : v.items()) out.push_back(item.scalar(what));
  return out;
}

std::size_t dimension(const Scalar& s) {
  if (!s.is_constant() || s.constant_value() < 1 || s.constant_value().get_den() != 1 ||
      !s.constant_value().get_num().fits_uint_p()) {
    throw Error(Errc::type, "dimension of de_sq_g must be a positive integer");
  }
  return s.constant_value().get_num().get_ui();
}

using Function = std::function<Value(Builder&, const Args&)>;

const std::map<std::string_view, Function>& functions() {
  static const std::map<std::string_view, Function> table = {
      {"area", [](Builder& b, const Args& a) -> Value { return b.geo().area(a.p(0), a.p(1), a.p(2)); }},
      {"de_sq", [](Builder& b, const Args& a) -> Value { return b.geo().de_sq(a.p(0), a.p(1)); }},
      {"de_sq_g",
       [](Builder& b, const Args& a) -> Value {
         return b.geo().de_sq_g(tuple_scalars(a[0], "argument 1 of de_sq_g"),
                                tuple_scalars(a[1], "argument 2 of de_sq_g"), dimension(a.s(2)));
       }},
      {"line_through", [](Builder& b, const Args& a) -> Value { return b.geo().line_through(a.p(0), a.p(1)); }},
      {"slope", [](Builder& b, const Args& a) -> Value { return b.geo().slope(a.p(0), a.p(1)); }},
      {"midpoint", [](Builder& b, const Args& a) -> Value { return b.geo().midpoint(a.p(0), a.p(1)); }},
      {"altitude", [](Builder& b, const Args& a) -> Value { return b.geo().altitude(a.p(0), a.s(1)); }},
      {"foot", [](Builder& b, const Args& a) -> Value { return b.geo().foot(a.p(0), a.s(1)); }},
      {"perp_pq", [](Builder& b, const Args& a) -> Value { return b.geo().perp_pq(a.p(0), a.p(1)); }},
      {"perp_mid", [](Builder& b, const Args& a) -> Value { return b.geo().perp_mid(a.p(0), a.p(1)); }},
      {"mirror_origin", [](Builder& b, const Args& a) -> Value { return b.geo().mirror_origin(a.p(0), a.p(1)); }},
      {"mirror_pt_line", [](Builder& b, const Args& a) -> Value { return b.geo().mirror_pt_line(a.p(0), a.s(1)); }},
      {"intersect", [](Builder& b, const Args& a) -> Value { return b.geo().intersect(a.s(0), a.s(1)); }},
      {"quad",
       [](Builder& b, const Args& a) -> Value {
         auto q = b.geo().quad(a.s(0), a.s(1), a.s(2), a.s(3));
         return points({q.begin(), q.end()});
       }},
      {"concurrency_point", [](Builder& b, const Args& a) -> Value { return b.geo().concurrency_point(a.scalars()); }},
      {"circle_through", [](Builder& b, const Args& a) -> Value { return b.geo().circle_through(a.points()); }},
      {"center", [](Builder& b, const Args& a) -> Value { return b.geo().center(a.s(0)); }},
      {"radius_sq", [](Builder& b, const Args& a) -> Value { return b.geo().radius_sq(a.s(0)); }},
      {"circumcenter", [](Builder& b, const Args& a) -> Value { return b.geo().circumcenter(a.p(0), a.p(1), a.p(2)); }},
      {"circumradius_sq",
       [](Builder& b, const Args& a) -> Value { return b.geo().circumradius_sq(a.p(0), a.p(1), a.p(2)); }},
      {"nine_point_circle",
       [](Builder& b, const Args& a) -> Value { return b.geo().nine_point_circle(a.p(0), a.p(1), a.p(2)); }},
      {"euler_line", [](Builder& b, const Args& a) -> Value { return b.geo().euler_line(a.p(0), a.p(1), a.p(2)); }},
      {"centroid", [](Builder& b, const Args& a) -> Value { return b.geo().centroid(a.p(0), a.p(1), a.p(2)); }},
      {"orthocenter", [](Builder& b, const Args& a) -> Value { return b.geo().orthocenter(a.p(0), a.p(1), a.p(2)); }},
      {"cet", [](Builder& b, const Args& a) -> Value { return b.geo().cet(a.p(0), a.p(1)); }},
      {"param_circle", [](Builder& b, const Args& a) -> Value { return b.geo().param_circle(a.p(0), a.s(1), a.s(2)); }},
      {"param_ellipse",
       [](Builder& b, const Args& a) -> Value { return b.geo().param_ellipse(a.p(0), a.p(1), a.s(2)); }},
      {"param_line", [](Builder& b, const Args& a) -> Value { return b.geo().param_line(a.s(0), a.s(1), a.s(2)); }},
      {"tangent", [](Builder& b, const Args& a) -> Value { return b.geo().tangent(a.s(0), a.p(1)); }},
      {"tangent_to_ellipse",
       [](Builder& b, const Args& a) -> Value { return b.geo().tangent_to_ellipse(a.p(0), a.p(1), a.s(2)); }},
      {"tc_ces_out",
       [](Builder& b, const Args& a) -> Value { return b.geo().tc_ces_out(a.p(0), a.s(1), a.p(2), a.s(3)); }},
      {"touch_circles_expr", [](Builder& b, const Args& a) -> Value { return b.geo().touch_circles_expr(a.s(0), a.s(1)); }},
      {"touch_circle_line_expr",
       [](Builder& b, const Args& a) -> Value { return b.geo().touch_circle_line_expr(a.s(0), a.s(1)); }},
      {"tan_sum", [](Builder& b, const Args& a) -> Value { return b.geo().tan_sum(a.scalars()); }},
      {"standard_triangle",
       [](Builder& b, const Args& a) -> Value {
         auto t = b.geo().standard_triangle(a.s(0), a.s(1));
         return points({t.a, t.b, t.c});
       }},
      {"incenter", [](Builder& b, const Args& a) -> Value { return b.geo().incenter(a.s(0), a.s(1)); }},
      {"inradius_sq", [](Builder& b, const Args& a) -> Value { return b.geo().inradius_sq(a.s(0), a.s(1)); }},
      {"incircle", [](Builder& b, const Args& a) -> Value { return b.geo().incircle(a.s(0), a.s(1)); }},
      {"sqrt_sum_expr",
       [](Builder& b, const Args& a) -> Value { return b.geo().sqrt_sum_expr(a.s(0), a.s(1), a.s(2)); }},
      {"de_pt_line_sq", [](Builder& b, const Args& a) -> Value { return b.geo().de_pt_line_sq(a.p(0), a.s(1)); }},
      {"at", [](Builder& b, const Args& a) -> Value { return at(b.geo(), a[0], a.p(1)); }},
      {"sqrt", [](Builder& b, const Args& a) -> Value { return kernel::adjoin_sqrt(a.s(0), b.session()); }},
  };
  return table;
}

using Predicate = std::function<Claim(Builder&, const Args&)>;

Claim zero_claim(std::vector<Scalar> residuals, std::vector<Scalar> subjects) {
  return Claim{ClaimKind::zero_identity, std::move(residuals), std::move(subjects), std::nullopt};
}

const std::map<std::string_view, Predicate>& predicates() {
  static const std::map<std::string_view, Predicate> table = {
      {"is_zero",
       [](Builder&, const Args& a) {
         auto parts = a[0].flatten();
         return zero_claim(parts, parts);
       }},
      {"equal",
       [](Builder&, const Args& a) {
         auto lhs = a[0].flatten(), rhs = a[1].flatten();
         if (lhs.size() != rhs.size() || a[0].is_scalar() != a[1].is_scalar()) {
           throw Error(Errc::type, "equal compares values of different shapes");
         }
         std::vector<Scalar> diff;
         for (std::size_t k = 0; k < lhs.size(); ++k) diff.push_back(lhs[k] - rhs[k]);
         lhs.insert(lhs.end(), rhs.begin(), rhs.end());
         return zero_claim(diff, lhs);
       }},
      {"incident",
       [](Builder& b, const Args& a) {
         Scalar r = b.geo().at(a.s(1), a.p(0));
         return zero_claim({r}, {a.s(1)});
       }},
      {"colinear",
       [](Builder& b, const Args& a) {
         auto ps = a.points();
         return Claim{ClaimKind::colinearity, b.geo().colinearity_residuals(ps), coords(ps), std::nullopt};
       }},
      {"concurrent",
       [](Builder& b, const Args& a) {
         auto lines = a.scalars();
         return Claim{ClaimKind::concurrency, b.geo().concurrency_residuals(lines), lines, std::nullopt};
       }},
      {"concyclic",
       [](Builder& b, const Args& a) {
         auto ps = a.points();
         return Claim{ClaimKind::concyclicity, b.geo().concyclicity_residuals(ps), coords(ps), std::nullopt};
       }},
      {"equilateral",
       [](Builder& b, const Args& a) {
         std::vector<Point> ps = a.points();
         return Claim{ClaimKind::equilaterality, b.geo().equilateral_residuals(ps[0], ps[1], ps[2]), coords(ps),
                      std::nullopt};
       }},
      {"touch_circles",
       [](Builder& b, const Args& a) {
         Scalar d = b.geo().touch_circles_expr(a.s(0), a.s(1));
         return Claim{ClaimKind::tangency, {d}, {a.s(0), a.s(1)}, std::nullopt};
       }},
      {"touch_circle_line",
       [](Builder& b, const Args& a) {
         Scalar d = b.geo().touch_circle_line_expr(a.s(0), a.s(1));
         return Claim{ClaimKind::tangency, {d}, {a.s(0), a.s(1)}, std::nullopt};
       }},
      {"sqrt_sum",
       [](Builder& b, const Args& a) {
         Scalar d = b.geo().sqrt_sum_expr(a.s(0), a.s(1), a.s(2));
         return zero_claim({d}, a.scalars());
       }},
  };
  return table;
}

}  // namespace

Value apply_function(Builder& b, std::string_view name, const std::vector<Value>& args) {
  auto it = functions().find(name);
  if (it == functions().end()) throw Error(Errc::unknown_primitive, "unknown primitive '" + std::string(name) + "'");
  return it->second(b, Args(name, args));
}

Claim apply_predicate(Builder& b, std::string_view name, const std::vector<Value>& args) {
  auto it = predicates().find(name);
  if (it == predicates().end()) throw Error(Errc::unknown_primitive, "unknown predicate '" + std::string(name) + "'");
  return it->second(b, Args(name, args));
}

}  // namespace planeprover::cli
