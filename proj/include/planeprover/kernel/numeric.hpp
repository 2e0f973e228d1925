#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "planeprover/kernel/scalar.hpp"

namespace planeprover::kernel {

using Real100 = boost::multiprecision::cpp_dec_float_100;

// Exact element a + b*i + c*r3 + d*i*r3 of Q(i, sqrt 3).
struct QI3 {
  mpq_class a, b, c, d;

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }
  friend QI3 operator+(const QI3& x, const QI3& y);
  friend QI3 operator-(const QI3& x, const QI3& y);
  friend QI3 operator*(const QI3& x, const QI3& y);
  // Throws Errc::division_by_zero for y == 0.
  friend QI3 operator/(const QI3& x, const QI3& y);
  friend bool operator==(const QI3& x, const QI3& y) = default;
  std::string to_string() const;
};

// Complex number with 100 significant decimal digits. `scale` tracks the
// magnitude of the quantities that produced it so cancellation can be told
// apart from a genuinely small value.
struct Approx {
  Real100 re, im;
  Real100 scale = 1;
};

// Result of evaluating a Scalar at a rational point: exact whenever every
// radical involved evaluates to a rational multiple of 1, i, r3 or i*r3.
class Value {
 public:
  Value() : v_(QI3{}) {}
  Value(QI3 q) : v_(std::move(q)) {}  // NOLINT
  Value(Approx a) : v_(std::move(a)) {}  // NOLINT
  static Value rational(const mpq_class& q) { return Value(QI3{q, 0, 0, 0}); }

  bool is_exact() const { return std::holds_alternative<QI3>(v_); }
  const QI3& exact() const { return std::get<QI3>(v_); }
  Approx approx() const;
  // Exact zero, or |value| <= 1e-50 * max(1, scale) in approximation mode.
  bool is_zero() const;

  friend Value operator+(const Value& x, const Value& y);
  friend Value operator-(const Value& x, const Value& y);
  friend Value operator*(const Value& x, const Value& y);
  friend Value operator/(const Value& x, const Value& y);
  // Agreement: exact equality, or difference within the zero threshold.
  friend bool same(const Value& x, const Value& y) { return (x - y).is_zero(); }

  std::string to_string() const;

 private:
  std::variant<QI3, Approx> v_;
};

using Point = std::vector<std::pair<Var, mpq_class>>;

// Every indeterminate of s other than i and r3 must be bound by `point`
// (Errc::invalid_argument otherwise). A vanishing denominator throws
// Errc::evaluation_pole.
Value eval_at(const Scalar& s, const Point& point);
Value eval_poly(const Poly& p, const Point& point);

}  // namespace planeprover::kernel
