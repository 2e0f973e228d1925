#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeprover/kernel/monomial.hpp"
#include "planeprover/kernel/session.hpp"

namespace planeprover::kernel {

struct Term {
  Monomial mono;
  mpq_class coeff;
};

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// strictly decreasing in the global grevlex order with no zero coefficients,
// so structural equality is mathematical equality. Quadratic generators
// (i, r3, formal radicals) appear with exponent 0 or 1 only; products are
// reduced through the session's rewrite rules.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c, SessionPtr session = nullptr);

  static Poly variable(const SessionPtr& session, Var v);
  // Terms in any order; like terms are combined and zeros dropped. Generator
  // exponents must already be 0 or 1.
  static Poly from_terms(SessionPtr session, std::vector<Term> terms);

  const SessionPtr& session() const { return session_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Precondition: is_constant().
  mpq_class constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].coeff; }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }
  // Precondition: !is_zero().
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  std::uint32_t support() const;
  bool has_generators() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const mpq_class& c) const;
  Poly times(const Monomial& m, const mpq_class& c) const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Coefficient of v^k, viewing the polynomial as univariate in v.
  Poly coeff(Var v, unsigned k) const;
  // Index k holds the coefficient of v^k.
  std::vector<Poly> coefficients(Var v) const;
  // Flip the sign of every term that carries generator `gen`.
  Poly conjugate(Var gen) const;
  // Split by generator pattern: the sum over returned pairs of
  // pattern * component reproduces *this; components are generator-free.
  std::vector<std::pair<Monomial, Poly>> components() const;
  // Positive rational c such that *this / c has coprime integer coefficients.
  mpq_class content() const;
  Poly monic() const;
  Poly derivative(Var v) const;
  // Replace v by `value` (a polynomial) everywhere.
  Poly substitute(Var v, const Poly& value) const;
  // Componentwise minimum of all exponent vectors.
  Monomial min_monomial() const;
  // Precondition: m divides every term.
  Poly divided_by_monomial(const Monomial& m) const;

  Poly with_session(SessionPtr s) const;
  std::string to_string() const;

 private:
  SessionPtr session_;
  std::vector<Term> terms_;

  friend class PolyBuilder;
};

// Exact division. `q` must be nonzero and free of quadratic generators.
// Returns std::nullopt when q does not divide p.
std::optional<Poly> try_divide(const Poly& p, const Poly& q);

// Picks the session shared by two operands; throws if they disagree.
SessionPtr common_session(const SessionPtr& a, const SessionPtr& b);

std::string format_monomial(const Monomial& m, const Session* session);
std::string format_rational(const mpq_class& q);

}  // namespace planeprover::kernel
