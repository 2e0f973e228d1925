#include "planeprover/groebner/groebner.hpp"

#include <algorithm>
#include <optional>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace planeprover::groebner {
namespace {

using kernel::check_deadline;
using kernel::check_term_budget;
using kernel::kMaxVars;
using kernel::Monomial;
using kernel::SessionPtr;
using kernel::Term;

// Polynomial in local variable positions (the order's list) with integer
// coefficients, terms strictly decreasing in grevlex on those positions.
struct ZTerm {
  Monomial m;
  mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

bool greater(const Monomial& a, const Monomial& b) { return kernel::grevlex(a, b) > 0; }

class Frame {
 public:
  explicit Frame(const MonomialOrder& order) : order_(order) {
    if (order.variables.size() > kMaxVars) throw Error(Errc::shape, "too many variables in monomial order");
    for (std::size_t j = 0; j < order.variables.size(); ++j) {
      if (position_[order.variables[j].id] >= 0) throw Error(Errc::invalid_argument, "variable repeated in order");
      position_[order.variables[j].id] = static_cast<int>(j);
    }
  }

  // Returns the integer-scaled local polynomial and the factor s such that
  // local = s * p.
  ZPoly to_local(const Poly& p, mpq_class* scale = nullptr) const {
    if (p.has_generators()) throw Error(Errc::invalid_argument, "groebner inputs must be free of quadratic generators");
    mpz_class den = 1;
    for (const Term& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.size());
    for (const Term& t : p.terms()) {
      Monomial m;
      unsigned d = 0;
      for (std::size_t k = 0; k < kMaxVars; ++k) {
        if (t.mono.exp[k] == 0) continue;
        if (position_[k] < 0) throw Error(Errc::invalid_argument, "polynomial involves a variable outside the order");
        m.exp[position_[k]] = t.mono.exp[k];
        d += t.mono.exp[k];
      }
      m.deg = static_cast<std::uint16_t>(d);
      out.push_back(ZTerm{m, t.coeff.get_num() * (den / t.coeff.get_den())});
    }
    std::sort(out.begin(), out.end(), [](const ZTerm& a, const ZTerm& b) { return greater(a.m, b.m); });
    if (scale) *scale = mpq_class(den);
    return out;
  }

  Poly to_global(const ZPoly& z, const mpq_class& divisor, const SessionPtr& session) const {
    std::vector<Term> terms;
    terms.reserve(z.size());
    for (const ZTerm& t : z) {
      Monomial m;
      for (std::size_t j = 0; j < order_.variables.size(); ++j) m.exp[order_.variables[j].id] = t.m.exp[j];
      m.deg = t.m.deg;
      mpq_class c(t.c);
      c /= divisor;
      terms.push_back(Term{m, std::move(c)});
    }
    return Poly::from_terms(session, std::move(terms));
  }

 private:
  const MonomialOrder& order_;
  std::array<int, kMaxVars> position_ = [] {
    std::array<int, kMaxVars> a{};
    a.fill(-1);
    return a;
  }();
};

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const ZTerm& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the integer content; returns it (sign included so that the
// leading coefficient becomes positive).
mpz_class make_primitive(ZPoly& p) {
  if (p.empty()) return 1;
  mpz_class g = content(p);
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (ZTerm& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

// a*p - b*m*q, kept in order.
ZPoly combine(const ZPoly& p, const mpz_class& a, const ZPoly& q, const Monomial& m, const mpz_class& b) {
  ZPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  mpz_class tmp;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(ZTerm{p[i].m, p[i].c * a});
      ++i;
      continue;
    }
    Monomial qm = m * q[j].m;
    if (i == p.size() || greater(qm, p[i].m)) {
      out.push_back(ZTerm{qm, -(q[j].c * b)});
      ++j;
    } else if (greater(p[i].m, qm)) {
      out.push_back(ZTerm{p[i].m, p[i].c * a});
      ++i;
    } else {
      tmp = p[i].c * a - q[j].c * b;
      if (tmp != 0) out.push_back(ZTerm{qm, tmp});
      ++i;
      ++j;
    }
  }
  check_term_budget(out.size());
  return out;
}

// Full reduction of p modulo divisors (integer pseudo-division). `multiplier`
// accumulates the rational factor: result = multiplier * remainder(p).
ZPoly reduce(ZPoly p, const std::vector<const ZPoly*>& divisors, mpq_class* multiplier) {
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < p.size()) {
    const ZPoly* hit = nullptr;
    for (const ZPoly* d : divisors) {
      if (d->front().m.divides(p[pos].m)) {
        hit = d;
        break;
      }
    }
    if (!hit) {
      ++pos;
      continue;
    }
    if ((++steps & 0x1F) == 0) check_deadline();
    const ZTerm& lt = hit->front();
    Monomial m = lt.m.quotient_of(p[pos].m);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), p[pos].c.get_mpz_t());
    mpz_class a = lt.c / g;
    mpz_class b = p[pos].c / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    p = combine(p, a, *hit, m, b);
    if (multiplier && a != 1) *multiplier *= a;
    // Keep coefficients small: remove content every few steps.
    if ((steps & 0x7) == 0 || p.size() < 64) {
      mpz_class c = content(p);
      if (c > 1) {
        for (ZTerm& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        if (multiplier) *multiplier /= c;
      }
    }
  }
  return p;
}

ZPoly spoly(const ZPoly& f, const ZPoly& g) {
  const Monomial l = f.front().m.lcm(g.front().m);
  mpz_class gg;
  mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  // (lc g / gg) * (l/lm f) * f - (lc f / gg) * (l/lm g) * g
  ZPoly fm;
  fm.reserve(f.size());
  const Monomial mf = f.front().m.quotient_of(l);
  const mpz_class af = g.front().c / gg;
  for (const ZTerm& t : f) fm.push_back(ZTerm{mf * t.m, t.c * af});
  return combine(fm, 1, g, g.front().m.quotient_of(l), f.front().c / gg);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

std::strong_ordering compare(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a.size() != b.size()) throw Error(Errc::shape, "exponent vectors differ in length");
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return b[k] <=> a[k];
  }
  return std::strong_ordering::equal;
}

Term leading_term(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(Errc::invalid_argument, "leading term of zero");
  Frame frame(order);
  ZPoly z = frame.to_local(p);
  Poly lt = frame.to_global(ZPoly{z.front()}, mpq_class(1), p.session());
  Term t = lt.leading();
  // Recover the rational coefficient of that monomial in p.
  for (const Term& u : p.terms()) {
    if (u.mono == t.mono) return u;
  }
  return t;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::invalid_argument, "s-polynomial of zero");
  SessionPtr session = kernel::common_session(f.session(), g.session());
  Frame frame(order);
  mpq_class sf, sg;
  ZPoly zf = frame.to_local(f, &sf);
  ZPoly zg = frame.to_local(g, &sg);
  // Exact rational S-polynomial: lcm/LT(f) * f - lcm/LT(g) * g.
  const Monomial l = zf.front().m.lcm(zg.front().m);
  ZPoly s = combine(ZPoly{}, 1, zf, zf.front().m.quotient_of(l), -zg.front().c);
  s = combine(s, 1, zg, zg.front().m.quotient_of(l), zf.front().c);
  // zf = sf * f, so lcm/LT(f) * f = (lcm/lm) * zf / lc(zf); s = lc(zg)*T1*zf... / (lc(zf) lc(zg)).
  return frame.to_global(s, mpq_class(zf.front().c * zg.front().c), session);
}

GroebnerBasis buchberger(const std::vector<Poly>& generators, const MonomialOrder& order) {
  Frame frame(order);
  SessionPtr session;
  for (const Poly& g : generators) session = kernel::common_session(session, g.session());

  std::vector<ZPoly> polys;   // every basis element ever added
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto update = [&](ZPoly h) {
    const std::size_t hi = polys.size();
    const Monomial& lh = h.front().m;
    // Gebauer-Moeller: candidate new pairs.
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k]) fresh.push_back(Pair{k, hi, polys[k].front().m.lcm(lh)});
    }
    auto coprime = [&](const Pair& p) {
      const Monomial& a = polys[p.i].front().m;
      return a.lcm(lh).deg == a.deg + lh.deg;
    };
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      if (!coprime(fresh[a])) {
        for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
          if (b == a) continue;
          if (fresh[b].lcm.divides(fresh[a].lcm)) {
            // Strict divisibility, or equal lcm with a tie broken by index
            // (keeping one representative, preferring a coprime one).
            if (!(fresh[b].lcm == fresh[a].lcm)) {
              drop = true;
            } else if (coprime(fresh[b]) || b < a) {
              drop = true;
            }
          }
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      const bool divided = lh.divides(p.lcm) && !(polys[p.i].front().m.lcm(lh) == p.lcm) &&
                           !(polys[p.j].front().m.lcm(lh) == p.lcm);
      if (!divided) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!coprime(p)) next.push_back(p);
    }
    pairs = std::move(next);
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k] && lh.divides(polys[k].front().m)) active[k] = false;
    }
    polys.push_back(std::move(h));
    active.push_back(true);
  };

  auto active_divisors = [&] {
    std::vector<const ZPoly*> out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) out.push_back(&polys[k]);
    }
    return out;
  };

  // Deterministic input order: increasing leading monomial, then size.
  std::vector<ZPoly> inputs;
  for (const Poly& g : generators) {
    if (g.is_zero()) continue;
    ZPoly z = frame.to_local(g);
    make_primitive(z);
    inputs.push_back(std::move(z));
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const ZPoly& a, const ZPoly& b) {
    if (!(a.front().m == b.front().m)) return greater(b.front().m, a.front().m);
    return a.size() < b.size();
  });
  for (ZPoly& z : inputs) {
    ZPoly r = reduce(std::move(z), active_divisors(), nullptr);
    if (r.empty()) continue;
    make_primitive(r);
    update(std::move(r));
  }

  while (!pairs.empty()) {
    check_deadline();
    // Normal selection: smallest lcm, ties by (j, i) for determinism.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (!(a.lcm == b.lcm)) return greater(b.lcm, a.lcm);
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    ZPoly s = spoly(polys[p.i], polys[p.j]);
    if (s.empty()) continue;
    make_primitive(s);
    ZPoly r = reduce(std::move(s), active_divisors(), nullptr);
    if (r.empty()) continue;
    make_primitive(r);
    update(std::move(r));
  }

  // Minimal basis, then inter-reduce.
  std::vector<ZPoly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (active[k]) minimal.push_back(polys[k]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const ZPoly& a, const ZPoly& b) { return greater(b.front().m, a.front().m); });
  GroebnerBasis out;
  out.order = order;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ZPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != k) others.push_back(&minimal[j]);
    }
    // Only the tail may be reduced; the leading term is irreducible by the others.
    ZPoly head{minimal[k].front()};
    ZPoly tail(minimal[k].begin() + 1, minimal[k].end());
    mpq_class mult = 1;
    ZPoly reduced_tail = reduce(std::move(tail), others, &mult);
    // reduced_tail = mult * (tail mod others); divide by mult * lc to make monic.
    mpq_class lead = mpq_class(head.front().c) * mult;
    Poly tail_poly = frame.to_global(reduced_tail, lead, session);
    Poly head_poly = frame.to_global(ZPoly{ZTerm{head.front().m, 1}}, mpq_class(1), session);
    out.basis.push_back(head_poly + tail_poly);
  }
  return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Frame frame(order);
  SessionPtr session = p.session();
  std::vector<ZPoly> zs;
  for (const Poly& d : divisors) {
    if (d.is_zero()) continue;
    session = kernel::common_session(session, d.session());
    zs.push_back(frame.to_local(d));
  }
  std::vector<const ZPoly*> ptrs;
  for (const ZPoly& z : zs) ptrs.push_back(&z);
  mpq_class scale;
  ZPoly local = frame.to_local(p, &scale);
  mpq_class mult = scale;
  ZPoly r = reduce(std::move(local), ptrs, &mult);
  return frame.to_global(r, mult, session);
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) { return normal_form(p, gb.basis, gb.order); }

}  // namespace planeprover::groebner
