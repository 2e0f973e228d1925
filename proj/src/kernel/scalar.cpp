#include "planeprover/kernel/scalar.hpp"

#include <algorithm>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/gcd.hpp"

namespace planeprover::kernel {
namespace {

Poly exact_quotient(const Poly& p, const Poly& q) {
  if (q.is_one()) return p;
  auto r = try_divide(p, q);
  if (!r) throw Error(Errc::internal_inconsistency, "expected exact division failed");
  return *r;
}

// Multiplies num and den until den is free of quadratic generators.
void rationalize(Poly& num, Poly& den) {
  const SessionPtr& session = den.session();
  if (!session) return;
  for (;;) {
    const std::uint32_t present = den.support() & session->generator_mask();
    if (present == 0) return;
    check_deadline();
    const std::uint32_t radicals = present & session->radical_mask();
    if (radicals != 0) {
      Var u{static_cast<std::uint8_t>(__builtin_ctz(radicals))};
      if (!den.coeff(u, 0).is_zero()) {
        throw Error(Errc::unsupported_radical_division, "denominator is not a monomial in " + session->name(u));
      }
      Poly factor = Poly::variable(session, u);
      num = num * factor;
      den = den * factor;
    } else {
      Var g = (present >> Session::kI.id) & 1u ? Session::kI : Session::kSqrt3;
      Poly factor = den.conjugate(g);
      num = num * factor;
      den = den * factor;
    }
  }
}

}  // namespace

Poly gcd_with_components(const Poly& p, const Poly& q) {
  SessionPtr session = common_session(p.session(), q.session());
  if (p.is_constant()) return Poly(1, session);
  if (!q.has_generators()) return gcd(p, q);
  auto comps = q.components();
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  Poly g = p;
  for (const auto& [pattern, part] : comps) {
    g = gcd(g, part.with_session(session));
    if (g.is_constant()) break;
  }
  return g;
}

Scalar::Scalar() : num_(0), den_(1) {}
Scalar::Scalar(long v) : num_(mpq_class(v)), den_(1) {}
Scalar::Scalar(const mpq_class& v, SessionPtr session) : num_(v, session), den_(1, session) {}
Scalar::Scalar(Poly p) : num_(std::move(p)) { den_ = Poly(1, num_.session()); }

Scalar Scalar::trusted(Poly num, Poly den) {
  Scalar s;
  SessionPtr session = common_session(num.session(), den.session());
  s.num_ = num.with_session(session);
  s.den_ = den.with_session(session);
  return s;
}

Scalar Scalar::variable(const SessionPtr& session, Var v) { return Scalar(Poly::variable(session, v)); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::malformed_scalar, "zero denominator");
  SessionPtr session = common_session(num.session(), den.session());
  Poly n = num.with_session(session);
  Poly d = den.with_session(session);
  if (n.is_zero()) return Scalar(mpq_class(0), session);
  rationalize(n, d);
  if (d.is_constant()) return trusted(n.scaled(1 / d.constant_value()), Poly(1, session));
  Poly g = gcd_with_components(d, n);
  if (!g.is_one()) {
    n = exact_quotient(n, g);
    d = exact_quotient(d, g);
  }
  mpq_class lc = d.leading().coeff;
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return trusted(std::move(n), std::move(d));
}

Scalar Scalar::operator-() const { return trusted(-num_, den_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return Scalar::trusted(b.num_, b.den_.with_session(common_session(a.session(), b.session())));
  if (b.is_zero()) return Scalar::trusted(a.num_, a.den_.with_session(common_session(a.session(), b.session())));
  SessionPtr session = common_session(a.session(), b.session());
  if (a.den_.is_one() && b.den_.is_one()) return Scalar::trusted(a.num_ + b.num_, Poly(1, session));
  if (a.den_ == b.den_) return Scalar::fraction(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return Scalar(mpq_class(0), session);
    return Scalar::trusted(std::move(num), a.den_ * b.den_);
  }
  Poly bp = exact_quotient(a.den_, g);
  Poly dp = exact_quotient(b.den_, g);
  Poly num = a.num_ * dp + b.num_ * bp;
  if (num.is_zero()) return Scalar(mpq_class(0), session);
  Poly h = gcd_with_components(g, num);
  if (!h.is_one()) {
    num = exact_quotient(num, h);
    g = exact_quotient(g, h);
  }
  Poly den = bp * dp * g;
  if (den.is_constant()) return Scalar::trusted(num.scaled(1 / den.constant_value()), Poly(1, session));
  return Scalar::trusted(std::move(num), std::move(den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  SessionPtr session = common_session(a.session(), b.session());
  if (a.is_zero() || b.is_zero()) return Scalar(mpq_class(0), session);
  if (a.den_.is_one() && b.den_.is_one()) {
    return Scalar::trusted(a.num_ * b.num_, Poly(1, session));
  }
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    Poly g = gcd_with_components(bd, an);
    if (!g.is_one()) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  if (!ad.is_one()) {
    Poly g = gcd_with_components(ad, bn);
    if (!g.is_one()) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  Poly num = an * bn;
  Poly den = ad * bd;
  if (num.is_zero()) return Scalar(mpq_class(0), session);
  if (a.num_.has_generators() && b.num_.has_generators() && !den.is_constant()) {
    Poly h = gcd_with_components(den, num);
    if (!h.is_one()) {
      num = exact_quotient(num, h);
      den = exact_quotient(den, h);
    }
  }
  if (den.is_constant()) return Scalar::trusted(num.scaled(1 / den.constant_value()), Poly(1, session));
  return Scalar::trusted(std::move(num), std::move(den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "division by the zero scalar");
  if (num_.has_generators()) return fraction(den_, num_);
  mpq_class lc = num_.leading().coeff;
  Poly n = den_.scaled(1 / lc);
  Poly d = num_.scaled(1 / lc);
  if (d.is_constant()) return trusted(n.scaled(1 / d.constant_value()), Poly(1, session()));
  return trusted(std::move(n), std::move(d));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero scalar");
  return a * b.inverse();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return Scalar(mpq_class(1), session());
  if (!num_.has_generators()) return trusted(num_.pow(k), den_.pow(k));
  Scalar result(mpq_class(1), session());
  Scalar base = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar normalize(const Scalar& s) { return Scalar::fraction(s.num(), s.den()); }

namespace {

struct Substitution {
  std::vector<Var> vars;
  std::vector<Poly> nums;
  std::vector<std::vector<Poly>> den_powers;  // den_powers[j][e] = den_j^e
  std::vector<unsigned> top;                  // common degree per variable

  const Poly& dpow(std::size_t j, unsigned e) {
    auto& table = den_powers[j];
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  }

  // p evaluated at the bindings from index j on, times prod den_k^top_k.
  Poly apply(const Poly& p, std::size_t j) {
    if (j == vars.size() || p.is_zero()) return p;
    const Var v = vars[j];
    const unsigned deg = p.degree(v);
    const bool plain = den_powers[j][1].is_one();
    if (deg == 0) {
      Poly inner = apply(p, j + 1);
      return plain ? inner : inner * dpow(j, top[j]);
    }
    std::vector<Poly> cs = p.coefficients(v);
    Poly acc = apply(cs[deg], j + 1);
    for (unsigned k = deg; k-- > 0;) {
      check_deadline();
      acc = acc * nums[j];
      if (!cs[k].is_zero()) {
        Poly c = apply(cs[k], j + 1);
        acc += plain ? c : c * dpow(j, deg - k);
      }
    }
    return plain || top[j] == deg ? acc : acc * dpow(j, top[j] - deg);
  }
};

}  // namespace

Scalar substitute(const Scalar& s, const std::vector<Binding>& bindings) {
  SessionPtr session = s.session();
  Substitution sub;
  bool polynomial_values = true;
  for (const auto& [v, value] : bindings) {
    session = common_session(session, value.session());
    if (session && session->is_generator(v)) {
      throw Error(Errc::invalid_argument, "cannot substitute for generator " + session->name(v));
    }
    if (!s.depends_on(v)) continue;
    sub.vars.push_back(v);
    sub.nums.push_back(value.num().with_session(session));
    sub.den_powers.push_back({Poly(1, session), value.den().with_session(session)});
    sub.top.push_back(std::max(s.num().degree(v), s.den().degree(v)));
    polynomial_values &= value.is_polynomial();
  }
  if (sub.vars.empty()) return s;
  Poly num = sub.apply(s.num().with_session(session), 0);
  if (s.is_polynomial() && polynomial_values) return Scalar(num);
  Poly den = sub.apply(s.den().with_session(session), 0);
  if (den.is_zero()) throw Error(Errc::division_by_zero, "substitution makes the denominator vanish");
  return Scalar::fraction(num, den);
}

Scalar coeff(const Scalar& p, Var v, unsigned k) {
  if (p.den().degree(v) > 0) throw Error(Errc::not_polynomial, "denominator involves the variable");
  if (p.is_polynomial()) return Scalar(p.num().coeff(v, k));
  return Scalar::fraction(p.num().coeff(v, k), p.den());
}

unsigned degree(const Scalar& p, Var v) {
  if (p.den().degree(v) > 0) throw Error(Errc::not_polynomial, "denominator involves the variable");
  return p.num().degree(v);
}

Scalar divide_exact(const Scalar& p, const Scalar& q) {
  if (!p.is_polynomial() || !q.is_polynomial()) throw Error(Errc::not_polynomial, "divide_exact needs polynomials");
  if (q.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
  if (q.has_generators()) {
    if (!q.is_constant()) throw Error(Errc::not_divisible, "divisor carries quadratic generators");
  }
  auto r = try_divide(p.num(), q.num());
  if (!r) throw Error(Errc::not_divisible, "division leaves a remainder");
  return Scalar(std::move(*r));
}

Scalar derivative(const Scalar& s, Var v) {
  if (!s.depends_on(v)) return Scalar(mpq_class(0), s.session());
  if (s.is_polynomial()) return Scalar(s.num().derivative(v));
  Poly num = s.num().derivative(v) * s.den() - s.num() * s.den().derivative(v);
  return Scalar::fraction(num, s.den() * s.den());
}

namespace {

bool perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

// Square root of a generator-free polynomial with positive leading
// coefficient, built term by term from the top; nullopt if not a square.
std::optional<Poly> poly_sqrt(const Poly& p) {
  const Term& lead = p.leading();
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (lead.mono.exp[k] % 2) return std::nullopt;
  }
  mpz_class rn, rd;
  if (!perfect_square(lead.coeff.get_num(), rn) || !perfect_square(lead.coeff.get_den(), rd)) return std::nullopt;
  Monomial half;
  for (std::size_t k = 0; k < kMaxVars; ++k) half.exp[k] = lead.mono.exp[k] / 2;
  half.deg = lead.mono.deg / 2;
  Poly root = Poly::from_terms(p.session(), {Term{half, mpq_class(rn, rd)}});
  const Term top = root.leading();
  for (std::size_t guard = 0; guard <= p.size() + 1; ++guard) {
    Poly rest = p - root * root;
    if (rest.is_zero()) return root;
    const Term& r = rest.leading();
    if (!top.mono.divides(r.mono)) return std::nullopt;
    Monomial m = top.mono.quotient_of(r.mono);
    if (grevlex(m, root.terms().back().mono) >= 0) return std::nullopt;
    root += Poly::from_terms(p.session(), {Term{m, r.coeff / (2 * top.coeff)}});
  }
  return std::nullopt;
}

}  // namespace

Scalar adjoin_sqrt(const Scalar& radicand, const SessionPtr& host) {
  if (radicand.is_zero()) throw Error(Errc::invalid_argument, "square root of zero");
  SessionPtr session = common_session(radicand.session(), host);
  if (radicand.has_generators()) {
    throw Error(Errc::unsupported_radical_division, "radicand must be free of quadratic generators");
  }
  // R = num * den = c * P with P primitive; sqrt(num/den) = sqrt(R)/den.
  Poly r = radicand.num() * radicand.den();
  mpq_class c = r.content();
  if (r.leading().coeff < 0) c = -c;
  Poly primitive = r.scaled(1 / c);
  // c = a/b; sqrt(c) = sqrt(a*b)/b.
  mpz_class ab = c.get_num() * c.get_den();
  Scalar scale = Scalar(mpq_class(1, 1)) / Scalar(mpq_class(c.get_den()));
  Scalar den_inverse = Scalar::fraction(Poly(1, session), radicand.den().with_session(session));
  if (primitive.is_constant()) {
    const bool negative = ab < 0;
    mpz_class m = abs(ab), root;
    Scalar unit(1);
    if (negative) unit = Scalar::variable(session, Session::kI);
    if (perfect_square(m, root)) return unit * Scalar(mpq_class(root)) * scale * den_inverse;
    if (m % 3 == 0 && perfect_square(m / 3, root)) {
      return unit * Scalar(mpq_class(root)) * Scalar::variable(session, Session::kSqrt3) * scale * den_inverse;
    }
  }
  if (!primitive.is_constant()) {
    if (auto root = poly_sqrt(primitive)) {
      return Scalar(root->with_session(session)) * adjoin_sqrt(Scalar(mpq_class(ab)), session) * scale * den_inverse;
    }
  }
  if (!session) throw Error(Errc::invalid_argument, "square root needs a session to host its generator");
  Poly stored = primitive.scaled(mpq_class(ab)).with_session(session);
  Var u = session->radical(stored);
  return Scalar::variable(session, u) * scale * den_inverse;
}

}  // namespace planeprover::kernel
