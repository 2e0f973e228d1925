#include "planeprover/kernel/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace planeprover::kernel {
namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; });
}

mpz_class denominator_lcm(const std::vector<Term>& terms) {
  mpz_class l = 1;
  for (const Term& t : terms) {
    if (t.coeff.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return l;
}

std::vector<mpz_class> integer_coefficients(const std::vector<Term>& terms, const mpz_class& scale) {
  std::vector<mpz_class> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    mpz_class c = scale / t.coeff.get_den();
    c *= t.coeff.get_num();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

SessionPtr common_session(const SessionPtr& a, const SessionPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw Error(Errc::invalid_argument, "operands belong to different sessions");
}

Poly::Poly(const mpq_class& c, SessionPtr session) : session_(std::move(session)) {
  if (c != 0) {
    mpq_class v = c;
    v.canonicalize();
    terms_.push_back(Term{Monomial{}, std::move(v)});
  }
}

Poly Poly::variable(const SessionPtr& session, Var v) {
  Poly p;
  p.session_ = session;
  p.terms_.push_back(Term{Monomial::of(v), mpq_class(1)});
  return p;
}

Poly Poly::from_terms(SessionPtr session, std::vector<Term> terms) {
  sort_terms(terms);
  Poly p;
  p.session_ = std::move(session);
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max<unsigned>(d, t.mono.deg);
  return d;
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max<unsigned>(d, t.mono[v]);
  return d;
}

std::uint32_t Poly::support() const {
  std::uint32_t s = 0;
  for (const Term& t : terms_) s |= t.mono.support();
  return s;
}

bool Poly::has_generators() const {
  if (!session_) return false;
  return (support() & session_->generator_mask()) != 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    auto c = grevlex(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(Term{tb[j].mono, subtract ? mpq_class(-tb[j].coeff) : tb[j].coeff});
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(ta[i].coeff - tb[j].coeff) : mpq_class(ta[i].coeff + tb[j].coeff);
      if (s != 0) out.push_back(Term{ta[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(Term{tb[j].mono, subtract ? mpq_class(-tb[j].coeff) : tb[j].coeff});
  return Poly::from_terms(common_session(a.session(), b.session()), std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a.session() ? a : a.with_session(b.session());
  if (a.is_zero()) return b.session() ? b : b.with_session(a.session());
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a.session() ? a : a.with_session(b.session());
  return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
  SessionPtr session = common_session(a.session(), b.session());
  if (a.is_zero() || b.is_zero()) return Poly(0, session);

  const std::uint32_t gen = session ? session->generator_mask() : 0;
  const std::uint32_t rad = session ? session->radical_mask() : 0;
  const bool reduce = (a.support() & b.support() & gen) != 0;

  const mpz_class la = denominator_lcm(a.terms());
  const mpz_class lb = denominator_lcm(b.terms());
  const std::vector<mpz_class> ca = integer_coefficients(a.terms(), la);
  const std::vector<mpz_class> cb = integer_coefficients(b.terms(), lb);

  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  // Products whose radical exponents reached 2, keyed by the mask of squared
  // radicals; they are multiplied by the radicands afterwards.
  std::map<std::uint32_t, std::unordered_map<Monomial, mpz_class, MonomialHash>> squared;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));

  mpz_class prod;
  std::size_t work = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Monomial& ma = a.terms()[i].mono;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if ((++work & 0x3FFF) == 0) {
        check_deadline();
        check_term_budget(acc.size());
      }
      Monomial m = ma * b.terms()[j].mono;
      mpz_mul(prod.get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
      if (reduce) {
        if (m.exp[Session::kI.id] == 2) {
          m = m.with(Session::kI, 0);
          prod = -prod;
        }
        if (m.exp[Session::kSqrt3.id] == 2) {
          m = m.with(Session::kSqrt3, 0);
          prod *= 3;
        }
        std::uint32_t sq = 0;
        if (rad != 0) {
          for (std::size_t k = 0; k < kMaxVars; ++k) {
            if (((rad >> k) & 1u) && m.exp[k] == 2) {
              sq |= 1u << k;
              m = m.with(Var{static_cast<std::uint8_t>(k)}, 0);
            }
          }
        }
        if (sq != 0) {
          squared[sq][m] += prod;
          continue;
        }
      }
      auto [it, inserted] = acc.try_emplace(m);
      if (inserted) {
        it->second = prod;
      } else {
        it->second += prod;
      }
    }
  }
  check_term_budget(acc.size());

  const mpz_class scale = la * lb;
  auto collect = [&](std::unordered_map<Monomial, mpz_class, MonomialHash>& table) {
    std::vector<Term> terms;
    terms.reserve(table.size());
    for (auto& [m, c] : table) {
      if (c == 0) continue;
      mpq_class q(c, scale);
      q.canonicalize();
      terms.push_back(Term{m, std::move(q)});
    }
    sort_terms(terms);
    Poly p;
    p.session_ = session;
    p.terms_ = std::move(terms);
    return p;
  };

  Poly result = collect(acc);
  for (auto& [mask, table] : squared) {
    Poly part = collect(table);
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if ((mask >> k) & 1u) part = part * session->radicand(Var{static_cast<std::uint8_t>(k)}).with_session(session);
    }
    result += part;
  }
  return result;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly(0, session_);
  Poly r = *this;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times(const Monomial& m, const mpq_class& c) const {
  Poly factor;
  factor.session_ = session_;
  if (c != 0) factor.terms_.push_back(Term{m, c});
  return *this * factor;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1, session_);
  if (k == 0) return result;
  result = *this;
  for (unsigned e = 1; e < k; ++e) result = result * *this;
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

Poly Poly::coeff(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.mono[v] == k) out.push_back(Term{t.mono.without(v), t.coeff});
  }
  return from_terms(session_, std::move(out));
}

std::vector<Poly> Poly::coefficients(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const Term& t : terms_) buckets[t.mono[v]].push_back(Term{t.mono.without(v), t.coeff});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(session_, std::move(b)));
  return out;
}

Poly Poly::conjugate(Var gen) const {
  Poly r = *this;
  for (Term& t : r.terms_) {
    if (t.mono[gen] % 2 == 1) t.coeff = -t.coeff;
  }
  return r;
}

std::vector<std::pair<Monomial, Poly>> Poly::components() const {
  const std::uint32_t gen = session_ ? session_->generator_mask() : 0;
  std::map<std::array<std::uint8_t, kMaxVars>, std::vector<Term>> groups;
  for (const Term& t : terms_) {
    Monomial pattern;
    Monomial rest = t.mono;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (((gen >> k) & 1u) && t.mono.exp[k] != 0) {
        pattern = pattern.with(Var{static_cast<std::uint8_t>(k)}, t.mono.exp[k]);
        rest = rest.without(Var{static_cast<std::uint8_t>(k)});
      }
    }
    groups[pattern.exp].push_back(Term{rest, t.coeff});
  }
  std::vector<std::pair<Monomial, Poly>> out;
  for (auto& [exps, terms] : groups) {
    Monomial pattern;
    pattern.exp = exps;
    unsigned d = 0;
    for (auto e : exps) d += e;
    pattern.deg = static_cast<std::uint16_t>(d);
    out.emplace_back(pattern, from_terms(session_, std::move(terms)));
  }
  return out;
}

mpq_class Poly::content() const {
  if (terms_.empty()) return 1;
  mpz_class g = 0;
  mpz_class l = 1;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  mpq_class c(abs(g), l);
  c.canonicalize();
  return c;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading().coeff);
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    unsigned e = t.mono[v];
    if (e == 0) continue;
    out.push_back(Term{t.mono.with(v, static_cast<std::uint8_t>(e - 1)), t.coeff * e});
  }
  return from_terms(session_, std::move(out));
}

Poly Poly::substitute(Var v, const Poly& value) const {
  if (degree(v) == 0) return *this;
  std::vector<Poly> cs = coefficients(v);
  // Horner from the top coefficient.
  Poly acc = cs.back();
  for (std::size_t k = cs.size() - 1; k-- > 0;) acc = acc * value + cs[k];
  return acc;
}

Monomial Poly::min_monomial() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].mono;
  for (const Term& t : terms_) m = m.gcd(t.mono);
  return m;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
  Poly r = *this;
  for (Term& t : r.terms_) t.mono = m.quotient_of(t.mono);
  return r;
}

Poly Poly::with_session(SessionPtr s) const {
  Poly r = *this;
  r.session_ = std::move(s);
  return r;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string format_monomial(const Monomial& m, const Session* session) {
  std::string out;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (m.exp[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += session ? session->name(Var{static_cast<std::uint8_t>(k)}) : "v" + std::to_string(k);
    if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    std::string mono = format_monomial(t.mono, session_.get());
    if (mono.empty()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += format_rational(c) + "*" + mono;
    }
  }
  return out;
}

std::optional<Poly> try_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (q.has_generators()) {
    throw Error(Errc::invalid_argument, "polynomial divisor must be free of quadratic generators");
  }
  SessionPtr session = common_session(p.session(), q.session());
  if (p.is_zero()) return Poly(0, session);
  if (q.is_constant()) return p.scaled(1 / q.constant_value()).with_session(session);
  if (q.size() == 1) {
    const Term& lt = q.leading();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const Term& t : p.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      out.push_back(Term{lt.mono.quotient_of(t.mono), t.coeff / lt.coeff});
    }
    return Poly::from_terms(session, std::move(out));
  }
  // Cheap necessary conditions before the full division.
  if (q.total_degree() > p.total_degree()) return std::nullopt;
  if ((q.support() & ~p.support()) != 0) return std::nullopt;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    Var v{static_cast<std::uint8_t>(k)};
    if (q.degree(v) > p.degree(v)) return std::nullopt;
  }

  const Term& lt = q.leading();
  std::map<Monomial, mpq_class, GrevlexGreater> rem;
  for (const Term& t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Term> quotient;
  std::size_t steps = 0;
  while (!rem.empty()) {
    if ((++steps & 0xFF) == 0) check_deadline();
    auto top = rem.begin();
    if (!lt.mono.divides(top->first)) return std::nullopt;
    Monomial qm = lt.mono.quotient_of(top->first);
    mpq_class qc = top->second / lt.coeff;
    rem.erase(top);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const Term& t = q.terms()[k];
      Monomial m = qm * t.mono;
      auto [it, inserted] = rem.try_emplace(m);
      it->second -= qc * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{qm, std::move(qc)});
    check_term_budget(rem.size());
  }
  Poly out = Poly::from_terms(session, std::move(quotient));
  return out;
}

}  // namespace planeprover::kernel
