#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planeprover/kernel/poly.hpp"

namespace planeprover::kernel {

// Canonical rational function num/den.
//
// Invariants: den is nonzero, free of quadratic generators and monic in
// grevlex; den shares no common factor with the generator components of
// num (see Poly::components). Together these make structural equality
// coincide with mathematical equality. Zero is 0/1.
class Scalar {
 public:
  Scalar();
  Scalar(long v);  // NOLINT: implicit so literals mix with Scalars
  Scalar(const mpq_class& v, SessionPtr session = nullptr);
  explicit Scalar(Poly p);

  // Canonicalizes num/den. Throws Errc::malformed_scalar if den is zero.
  static Scalar fraction(const Poly& num, const Poly& den);
  static Scalar variable(const SessionPtr& session, Var v);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  SessionPtr session() const { return common_session(num_.session(), den_.session()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Precondition: is_constant().
  mpq_class constant_value() const { return num_.constant_value(); }
  bool has_generators() const { return num_.has_generators(); }
  bool depends_on(Var v) const { return num_.degree(v) > 0 || den_.degree(v) > 0; }
  std::uint32_t support() const { return num_.support() | den_.support(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Throws Errc::division_by_zero when b is zero and
  // Errc::unsupported_radical_division for radical-bearing b that is not a
  // monomial in its radicals.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar pow(int k) const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  // Trusts the caller that (num, den) is already canonical.
  static Scalar trusted(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

using Binding = std::pair<Var, Scalar>;

// Recomputes the canonical form from scratch; idempotent.
Scalar normalize(const Scalar& s);

// Simultaneous substitution; bound variables must not be quadratic generators.
Scalar substitute(const Scalar& s, const std::vector<Binding>& bindings);

// Coefficient of v^k. Throws Errc::not_polynomial if den involves v.
Scalar coeff(const Scalar& p, Var v, unsigned k);
unsigned degree(const Scalar& p, Var v);

// p / q for polynomial p, q. Throws Errc::not_divisible when inexact,
// Errc::not_polynomial for fractional operands.
Scalar divide_exact(const Scalar& p, const Scalar& q);

// Formal partial derivative (generators are constants).
Scalar derivative(const Scalar& s, Var v);

// A square root of `radicand` as a Scalar. Rational squares, 3 and -1 (up
// to rational square factors) map to rationals, r3 and i; otherwise a
// formal generator u with u^2 = num*den is adjoined and u/den returned, so
// the result squares to radicand. Equal radicands reuse their generator.
// `session` hosts the new generator when radicand itself is session-free.
Scalar adjoin_sqrt(const Scalar& radicand, const SessionPtr& session = nullptr);

// gcd over Q of `p` with every generator component of `q` (p generator-free).
Poly gcd_with_components(const Poly& p, const Poly& q);

}  // namespace planeprover::kernel
