#include "planeprover/kernel/numeric.hpp"

#include <array>
#include <map>
#include <optional>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace planeprover::kernel {
namespace {

Real100 to_real(const mpq_class& q) {
  return Real100(q.get_num().get_str()) / Real100(q.get_den().get_str());
}

Approx to_approx(const QI3& q) {
  static const Real100 root3 = boost::multiprecision::sqrt(Real100(3));
  Approx out;
  out.re = to_real(q.a) + to_real(q.c) * root3;
  out.im = to_real(q.b) + to_real(q.d) * root3;
  out.scale = boost::multiprecision::abs(out.re) + boost::multiprecision::abs(out.im);
  return out;
}

Real100 magnitude(const Approx& a) { return boost::multiprecision::abs(a.re) + boost::multiprecision::abs(a.im); }

const Real100& threshold() {
  static const Real100 t("1e-50");
  return t;
}

}  // namespace

QI3 operator+(const QI3& x, const QI3& y) { return QI3{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
QI3 operator-(const QI3& x, const QI3& y) { return QI3{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

QI3 operator*(const QI3& x, const QI3& y) {
  // Basis 1, i, r, ir with i^2 = -1, r^2 = 3.
  QI3 z;
  z.a = x.a * y.a - x.b * y.b + 3 * x.c * y.c - 3 * x.d * y.d;
  z.b = x.a * y.b + x.b * y.a + 3 * x.c * y.d + 3 * x.d * y.c;
  z.c = x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b;
  z.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
  return z;
}

QI3 operator/(const QI3& x, const QI3& y) {
  if (y.is_zero()) throw Error(Errc::division_by_zero, "division by zero in Q(i, sqrt 3)");
  // y * conj_i(y) lies in Q(sqrt 3); multiplying by its conjugate gives a rational.
  QI3 ci{y.a, -y.b, y.c, -y.d};
  QI3 s = y * ci;
  QI3 cr{s.a, s.b, -s.c, -s.d};
  QI3 norm = s * cr;
  QI3 numerator = x * ci * cr;
  return QI3{numerator.a / norm.a, numerator.b / norm.a, numerator.c / norm.a, numerator.d / norm.a};
}

std::string QI3::to_string() const {
  std::string out;
  auto part = [&](const mpq_class& q, const char* unit) {
    if (q == 0) return;
    if (!out.empty()) out += q < 0 ? " - " : " + ";
    else if (q < 0) out += "-";
    mpq_class m = abs(q);
    out += m.get_str();
    if (*unit) out += std::string("*") + unit;
  };
  part(a, "");
  part(b, "i");
  part(c, "r3");
  part(d, "i*r3");
  return out.empty() ? "0" : out;
}

Approx Value::approx() const {
  if (const auto* q = std::get_if<QI3>(&v_)) return to_approx(*q);
  return std::get<Approx>(v_);
}

bool Value::is_zero() const {
  if (const auto* q = std::get_if<QI3>(&v_)) return q->is_zero();
  const Approx& a = std::get<Approx>(v_);
  Real100 scale = a.scale > 1 ? a.scale : Real100(1);
  return magnitude(a) <= threshold() * scale;
}

Value operator+(const Value& x, const Value& y) {
  if (x.is_exact() && y.is_exact()) return Value(x.exact() + y.exact());
  Approx a = x.approx(), b = y.approx();
  return Value(Approx{a.re + b.re, a.im + b.im, std::max(a.scale, b.scale)});
}

Value operator-(const Value& x, const Value& y) {
  if (x.is_exact() && y.is_exact()) return Value(x.exact() - y.exact());
  Approx a = x.approx(), b = y.approx();
  return Value(Approx{a.re - b.re, a.im - b.im, std::max(a.scale, b.scale)});
}

Value operator*(const Value& x, const Value& y) {
  if (x.is_exact() && y.is_exact()) return Value(x.exact() * y.exact());
  Approx a = x.approx(), b = y.approx();
  return Value(Approx{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.scale * b.scale});
}

Value operator/(const Value& x, const Value& y) {
  if (x.is_exact() && y.is_exact()) return Value(x.exact() / y.exact());
  if (y.is_zero()) throw Error(Errc::division_by_zero, "division by an approximate zero");
  Approx a = x.approx(), b = y.approx();
  Real100 norm = b.re * b.re + b.im * b.im;
  Real100 mag = magnitude(b);
  return Value(Approx{(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm, a.scale / mag});
}

std::string Value::to_string() const {
  if (const auto* q = std::get_if<QI3>(&v_)) return q->to_string();
  const Approx& a = std::get<Approx>(v_);
  return a.re.str(30) + " + " + a.im.str(30) + "*i";
}

namespace {

class Evaluator {
 public:
  Evaluator(const Session* session, const Point& point) : session_(session) {
    for (const auto& [v, q] : point) values_[v.id] = q;
  }

  Value poly(const Poly& p) {
    // Rational sums per generator pattern, combined at the end.
    std::map<std::uint32_t, mpq_class> sums;
    const std::uint32_t gen = session_ ? session_->generator_mask() : 0;
    std::size_t work = 0;
    for (const Term& t : p.terms()) {
      if ((++work & 0x3FF) == 0) check_deadline();
      mpq_class c = t.coeff;
      std::uint32_t pattern = 0;
      for (std::size_t k = 0; k < kMaxVars; ++k) {
        const unsigned e = t.mono.exp[k];
        if (e == 0) continue;
        if ((gen >> k) & 1u) {
          pattern |= 1u << k;
          continue;
        }
        c *= power(k, e);
      }
      sums[pattern] += c;
    }
    Value total;
    for (const auto& [pattern, c] : sums) {
      if (c == 0) continue;
      Value term = Value::rational(c);
      for (std::size_t k = 0; k < kMaxVars; ++k) {
        if ((pattern >> k) & 1u) term = term * generator(k);
      }
      if (!term.is_exact()) {
        Approx a = term.approx();
        a.scale = magnitude(a);
        term = Value(a);
      }
      total = total + term;
    }
    return total;
  }

 private:
  const mpq_class& power(std::size_t k, unsigned e) {
    auto& table = powers_[k];
    if (table.empty()) {
      if (!values_[k]) {
        throw Error(Errc::invalid_argument,
                    "no value for " + (session_ ? session_->name(Var{static_cast<std::uint8_t>(k)}) : std::string("?")));
      }
      table.push_back(1);
      table.push_back(*values_[k]);
    }
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  }

  const Value& generator(std::size_t k) {
    if (generators_[k]) return *generators_[k];
    Var v{static_cast<std::uint8_t>(k)};
    Value out;
    if (v == Session::kI) {
      out = QI3{0, 1, 0, 0};
    } else if (v == Session::kSqrt3) {
      out = QI3{0, 0, 1, 0};
    } else {
      Value r = poly(session_->radicand(v));
      out = square_root(r.exact().a);
    }
    generators_[k] = out;
    return *generators_[k];
  }

  static Value square_root(const mpq_class& q) {
    if (q == 0) return Value();
    // sqrt(n/d) = sqrt(|n d|) / d, times i when negative.
    mpz_class m = abs(q.get_num() * q.get_den());
    const bool negative = q < 0;
    mpz_class root;
    auto exact = [&](mpq_class coefficient, bool with_r3) {
      coefficient.canonicalize();
      QI3 z;
      if (with_r3) {
        (negative ? z.d : z.c) = coefficient;
      } else {
        (negative ? z.b : z.a) = coefficient;
      }
      return Value(z);
    };
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
      return exact(mpq_class(root, q.get_den()), false);
    }
    if (m % 3 == 0) {
      mpz_class third = m / 3;
      if (mpz_perfect_square_p(third.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), third.get_mpz_t());
        return exact(mpq_class(root, q.get_den()), true);
      }
    }
    Real100 r = boost::multiprecision::sqrt(to_real(abs(q)));
    Approx a;
    if (negative) {
      a.im = r;
    } else {
      a.re = r;
    }
    a.scale = r;
    return Value(a);
  }

  const Session* session_;
  std::array<std::optional<mpq_class>, kMaxVars> values_;
  std::array<std::vector<mpq_class>, kMaxVars> powers_;
  std::array<std::optional<Value>, kMaxVars> generators_;
};

}  // namespace

Value eval_poly(const Poly& p, const Point& point) {
  Evaluator ev(p.session().get(), point);
  return ev.poly(p);
}

Value eval_at(const Scalar& s, const Point& point) {
  SessionPtr session = s.session();
  Evaluator ev(session.get(), point);
  Value den = ev.poly(s.den());
  if (den.is_zero()) throw Error(Errc::evaluation_pole, "denominator vanishes at the point");
  Value num = ev.poly(s.num());
  return num / den;
}

}  // namespace planeprover::kernel
