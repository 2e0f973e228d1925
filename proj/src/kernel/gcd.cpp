#include "planeprover/kernel/gcd.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace planeprover::kernel {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Arithmetic modulo a prime below 2^62.

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128(a) * b) % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
  u64 from(const mpq_class& q) const { return mul(from(q.get_num()), inv(from(q.get_den()))); }
};

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    mpz_class start = mpz_class(1) << 62;
    for (int k = 1; k <= 64; ++k) {
      mpz_class base = start - (mpz_class(k) << 36);
      mpz_class q;
      mpz_nextprime(q.get_mpz_t(), base.get_mpz_t());
      out.push_back(q.get_ui());
    }
    return out;
  }();
  return list;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 engine(0x5EEDC0DEULL);
  return engine;
}

u64 random_residue(const Field& f) { return rng()() % f.p; }

struct Unlucky {};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z_p, coefficients low to high.

using UPoly = std::vector<u64>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

u64 ueval(const Field& f, const UPoly& u, u64 x) {
  u64 r = 0;
  for (std::size_t k = u.size(); k-- > 0;) r = f.add(f.mul(r, x), u[k]);
  return r;
}

UPoly umul(const Field& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// Remainder of a / b; quotient returned through *q when non-null.
UPoly urem(const Field& f, UPoly a, const UPoly& b, UPoly* q = nullptr) {
  const int db = udeg(b);
  const u64 inv_lc = f.inv(b.back());
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int k = udeg(a); k >= db; --k) {
    u64 c = f.mul(a[k], inv_lc);
    if (c == 0) continue;
    if (q) (*q)[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] = f.sub(a[k - db + j], f.mul(c, b[j]));
  }
  trim(a);
  if (q) trim(*q);
  return a;
}

UPoly umonic(const Field& f, UPoly u) {
  if (u.empty()) return u;
  u64 inv_lc = f.inv(u.back());
  for (u64& c : u) c = f.mul(c, inv_lc);
  return u;
}

UPoly ugcd(const Field& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(f, std::move(a));
}

// Exact quotient a / b (caller guarantees divisibility).
UPoly uquo(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly q;
  UPoly r = urem(f, a, b, &q);
  if (!r.empty()) throw Unlucky{};
  return q;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over Z_p in local variables 0..k-1, terms
// strictly decreasing in lex order (variable 0 most significant). With the
// last variable least significant, terms sharing the same exponents in the
// other variables are contiguous, which the "last variable" helpers exploit.

struct MTerm {
  Monomial m;
  u64 c;
};
using MPoly = std::vector<MTerm>;

bool lex_greater(const Monomial& a, const Monomial& b) { return lex(a, b) > 0; }

void msort(MPoly& p) {
  std::sort(p.begin(), p.end(), [](const MTerm& a, const MTerm& b) { return lex_greater(a.m, b.m); });
}

MPoly madd(const Field& f, const MPoly& a, const MPoly& b) {
  MPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = lex(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      u64 s = f.add(a[i].c, b[j].c);
      if (s != 0) out.push_back(MTerm{a[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

MPoly mscale(const Field& f, MPoly p, u64 s) {
  if (s == 0) return {};
  for (MTerm& t : p) t.c = f.mul(t.c, s);
  return p;
}

MPoly mmonic(const Field& f, MPoly p) {
  if (p.empty()) return p;
  return mscale(f, std::move(p), f.inv(p.front().c));
}

bool mconstant(const MPoly& p) { return p.size() == 1 && p.front().m.is_one(); }

// Iterate groups of terms sharing everything but the last variable.
template <typename Fn>
void for_each_group(const MPoly& p, std::size_t last, Fn&& fn) {
  Var lv{static_cast<std::uint8_t>(last)};
  std::size_t i = 0;
  while (i < p.size()) {
    Monomial head = p[i].m.without(lv);
    std::size_t j = i;
    UPoly u;
    while (j < p.size() && p[j].m.without(lv) == head) {
      unsigned e = p[j].m[lv];
      if (u.size() <= e) u.resize(e + 1, 0);
      u[e] = p[j].c;
      ++j;
    }
    fn(head, u);
    i = j;
  }
}

MPoly meval_last(const Field& f, const MPoly& p, std::size_t last, u64 x) {
  MPoly out;
  for_each_group(p, last, [&](const Monomial& head, const UPoly& u) {
    u64 v = ueval(f, u, x);
    if (v != 0) out.push_back(MTerm{head, v});
  });
  return out;
}

UPoly mcontent_last(const Field& f, const MPoly& p, std::size_t last) {
  UPoly g;
  bool first = true;
  for_each_group(p, last, [&](const Monomial&, const UPoly& u) {
    if (first) {
      g = umonic(f, u);
      first = false;
    } else if (udeg(g) > 0) {
      g = ugcd(f, g, u);
    }
  });
  return g;
}

UPoly mlc_last(const MPoly& p, std::size_t last) {
  UPoly out;
  bool done = false;
  for_each_group(p, last, [&](const Monomial&, const UPoly& u) {
    if (!done) {
      out = u;
      done = true;
    }
  });
  return out;
}

// Multiply every group by u (or divide exactly when `divide`).
MPoly mgroupwise(const Field& f, const MPoly& p, std::size_t last, const UPoly& u, bool divide) {
  Var lv{static_cast<std::uint8_t>(last)};
  MPoly out;
  for_each_group(p, last, [&](const Monomial& head, const UPoly& g) {
    UPoly r = divide ? uquo(f, g, u) : umul(f, g, u);
    for (std::size_t e = r.size(); e-- > 0;) {
      if (r[e] != 0) out.push_back(MTerm{head.with(lv, static_cast<std::uint8_t>(e)), r[e]});
    }
  });
  return out;
}

// s(x_0..x_{k-2}) * q(x_last), merged into h.
MPoly madd_outer(const Field& f, const MPoly& h, const MPoly& s, const UPoly& q, std::size_t last) {
  Var lv{static_cast<std::uint8_t>(last)};
  MPoly prod;
  prod.reserve(s.size() * q.size());
  for (const MTerm& t : s) {
    for (std::size_t e = q.size(); e-- > 0;) {
      if (q[e] != 0) prod.push_back(MTerm{t.m.with(lv, static_cast<std::uint8_t>(e)), f.mul(t.c, q[e])});
    }
  }
  return madd(f, h, prod);
}

int mdeg(const MPoly& p, std::size_t v) {
  int d = -1;
  for (const MTerm& t : p) d = std::max<int>(d, t.m.exp[v]);
  return d;
}

// Trial division a / b over Z_p (lex). True iff the remainder is zero.
bool mdivides(const Field& f, const MPoly& b, const MPoly& a) {
  if (b.empty()) return a.empty();
  const MTerm& lt = b.front();
  const u64 inv_lc = f.inv(lt.c);
  std::map<Monomial, u64, bool (*)(const Monomial&, const Monomial&)> rem(lex_greater);
  for (const MTerm& t : a) rem.emplace(t.m, t.c);
  std::size_t steps = 0;
  while (!rem.empty()) {
    if ((++steps & 0xFF) == 0) check_deadline();
    auto top = rem.begin();
    if (!lt.m.divides(top->first)) return false;
    Monomial qm = lt.m.quotient_of(top->first);
    u64 qc = f.mul(top->second, inv_lc);
    rem.erase(top);
    for (std::size_t k = 1; k < b.size(); ++k) {
      Monomial m = qm * b[k].m;
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second = f.sub(it->second, f.mul(qc, b[k].c));
      if (it->second == 0) rem.erase(it);
    }
  }
  return true;
}

// Brown's PGCD: gcd of a, b in Z_p[x_0..x_{k-1}], monic in lex. Inner
// levels trust the degree bound instead of trial-dividing; the outermost
// level (`verify`) checks divisibility before returning.
MPoly pgcd(const Field& f, MPoly a, MPoly b, std::size_t k, const std::vector<int>& bound, bool verify = true) {
  check_deadline();
  if (k == 1) {
    UPoly ua, ub;
    for (const MTerm& t : a) {
      if (ua.size() <= t.m.exp[0]) ua.resize(t.m.exp[0] + 1, 0);
      ua[t.m.exp[0]] = t.c;
    }
    for (const MTerm& t : b) {
      if (ub.size() <= t.m.exp[0]) ub.resize(t.m.exp[0] + 1, 0);
      ub[t.m.exp[0]] = t.c;
    }
    UPoly g = ugcd(f, ua, ub);
    MPoly out;
    for (std::size_t e = g.size(); e-- > 0;) {
      if (g[e] != 0) out.push_back(MTerm{Monomial::of(Var{0}, static_cast<unsigned>(e)), g[e]});
    }
    return out;
  }

  const std::size_t last = k - 1;
  const Var lv{static_cast<std::uint8_t>(last)};
  UPoly ca = mcontent_last(f, a, last);
  UPoly cb = mcontent_last(f, b, last);
  UPoly c = ugcd(f, ca, cb);
  if (udeg(ca) > 0) a = mgroupwise(f, a, last, ca, true);
  if (udeg(cb) > 0) b = mgroupwise(f, b, last, cb, true);

  auto content_only = [&] {
    MPoly out;
    for (std::size_t e = c.size(); e-- > 0;) {
      if (c[e] != 0) out.push_back(MTerm{Monomial::of(lv, static_cast<unsigned>(e)), c[e]});
    }
    return out;
  };

  // After removing contents, a constant-in-the-other-variables operand means
  // the primitive parts are coprime.
  if (mdeg(a, last) == static_cast<int>(0) && a.size() == 1 && a.front().m.is_one()) return content_only();
  bool a_only_last = true, b_only_last = true;
  for (const MTerm& t : a) a_only_last &= t.m.without(lv).is_one();
  for (const MTerm& t : b) b_only_last &= t.m.without(lv).is_one();
  if (a_only_last || b_only_last) return content_only();

  UPoly g = ugcd(f, mlc_last(a, last), mlc_last(b, last));
  const int da = mdeg(a, last), db = mdeg(b, last);
  const int safe = udeg(g) + std::min(da, db);
  const int quick = udeg(g) + std::min({da, db, bound[last]});

  MPoly h;
  UPoly q{1};
  Monomial lm_h;
  bool have = false;
  int n = 0;
  int attempts = 0;
  const int max_attempts = 4 * (safe + 2) + 64;
  while (true) {
    if (++attempts > max_attempts) throw Unlucky{};
    u64 alpha = random_residue(f);
    u64 g_alpha = ueval(f, g, alpha);
    if (g_alpha == 0) continue;
    MPoly a_alpha = meval_last(f, a, last, alpha);
    MPoly b_alpha = meval_last(f, b, last, alpha);
    if (a_alpha.empty() || b_alpha.empty()) continue;
    MPoly img = pgcd(f, std::move(a_alpha), std::move(b_alpha), k - 1, bound, false);
    if (mconstant(img)) return content_only();
    const Monomial& lm = img.front().m;
    if (!have || lex(lm, lm_h) < 0) {
      h = mscale(f, std::move(img), g_alpha);
      lm_h = h.front().m;
      q = UPoly{f.neg(alpha), 1};
      have = true;
      n = 1;
    } else if (lex(lm, lm_h) > 0) {
      continue;
    } else {
      MPoly target = mscale(f, std::move(img), g_alpha);
      MPoly at = meval_last(f, h, last, alpha);
      MPoly diff = madd(f, target, mscale(f, at, f.neg(1)));
      if (!diff.empty()) {
        u64 scale = f.inv(ueval(f, q, alpha));
        h = madd_outer(f, h, mscale(f, diff, scale), q, last);
      }
      q = umul(f, q, UPoly{f.neg(alpha), 1});
      ++n;
    }
    if (n == quick + 1 || n == safe + 1) {
      UPoly hc = mcontent_last(f, h, last);
      MPoly cand = udeg(hc) > 0 ? mgroupwise(f, h, last, hc, true) : h;
      if (!verify || (mdivides(f, cand, a) && mdivides(f, cand, b))) {
        MPoly out = udeg(c) > 0 ? mgroupwise(f, cand, last, c, false) : cand;
        msort(out);
        return mmonic(f, std::move(out));
      }
      if (n >= safe + 1) have = false;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer layer.

// Local-variable view of a kernel polynomial with integer coefficients.
struct ZPoly {
  std::vector<Monomial> mono;  // lex-decreasing, local variable positions
  std::vector<mpz_class> coeff;
};

// `order[j]` is the global variable placed at local position j.
ZPoly to_local(const Poly& p, const std::vector<Var>& order) {
  std::vector<std::pair<Monomial, mpz_class>> items;
  items.reserve(p.size());
  for (const Term& t : p.terms()) {
    Monomial m;
    unsigned d = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      m.exp[j] = t.mono[order[j]];
      d += m.exp[j];
    }
    m.deg = static_cast<std::uint16_t>(d);
    items.emplace_back(m, t.coeff.get_num());
  }
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
  ZPoly z;
  for (auto& [m, c] : items) {
    z.mono.push_back(m);
    z.coeff.push_back(std::move(c));
  }
  return z;
}

Poly from_local(const std::vector<Monomial>& mono, const std::vector<mpz_class>& coeff,
                const std::vector<Var>& order, const SessionPtr& session) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (coeff[i] == 0) continue;
    Monomial m;
    unsigned d = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      m.exp[order[j].id] = mono[i].exp[j];
      d += mono[i].exp[j];
    }
    m.deg = static_cast<std::uint16_t>(d);
    terms.push_back(Term{m, mpq_class(coeff[i])});
  }
  return Poly::from_terms(session, std::move(terms));
}

MPoly reduce_mod(const Field& f, const ZPoly& z) {
  MPoly out;
  out.reserve(z.mono.size());
  for (std::size_t i = 0; i < z.mono.size(); ++i) {
    u64 c = f.from(z.coeff[i]);
    if (c != 0) out.push_back(MTerm{z.mono[i], c});
  }
  return out;
}

// Integer-primitive form with positive grevlex leading coefficient.
Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Poly r = p.scaled(1 / p.content());
  if (r.leading().coeff < 0) r = -r;
  return r;
}

bool divides(const Poly& d, const Poly& p) { return try_divide(p, d).has_value(); }

// Brown's MGCD over Z for primitive integer polynomials in `order`.
Poly brown(const Poly& a, const Poly& b, const std::vector<Var>& order, const std::vector<int>& bound,
           const SessionPtr& session) {
  const ZPoly za = to_local(a, order);
  const ZPoly zb = to_local(b, order);
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), za.coeff.front().get_mpz_t(), zb.coeff.front().get_mpz_t());

  std::vector<Monomial> h_mono;
  std::vector<mpz_class> h_coeff;
  mpz_class modulus = 0;
  Monomial lm_h;
  std::vector<mpz_class> previous;

  for (u64 p : primes()) {
    Field f{p};
    if (f.from(za.coeff.front()) == 0 || f.from(zb.coeff.front()) == 0) continue;
    MPoly gp;
    try {
      gp = pgcd(f, reduce_mod(f, za), reduce_mod(f, zb), order.size(), bound);
    } catch (const Unlucky&) {
      continue;
    }
    if (mconstant(gp)) return Poly(1, session);
    msort(gp);
    gp = mscale(f, std::move(gp), f.from(gamma));
    const Monomial& lm = gp.front().m;

    if (modulus == 0 || lex(lm, lm_h) < 0) {
      h_mono.clear();
      h_coeff.clear();
      for (const MTerm& t : gp) {
        h_mono.push_back(t.m);
        h_coeff.emplace_back(t.c);
      }
      modulus = p;
      lm_h = lm;
      previous.clear();
    } else if (lex(lm, lm_h) > 0) {
      continue;
    } else {
      // Chinese remaindering over the union of supports.
      std::vector<Monomial> mono;
      std::vector<mpz_class> coeff;
      mpz_class minv_z;
      mpz_class pz(static_cast<unsigned long>(p));
      mpz_invert(minv_z.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
      const u64 minv = minv_z.get_ui();
      std::size_t i = 0, j = 0;
      auto combine = [&](const Monomial& m, const mpz_class& hv, u64 gv) {
        u64 hr = f.from(hv);
        u64 t = f.mul(f.sub(gv, hr), minv);
        mpz_class v = hv + modulus * mpz_class(static_cast<unsigned long>(t));
        mono.push_back(m);
        coeff.push_back(std::move(v));
      };
      while (i < h_mono.size() || j < gp.size()) {
        if (j == gp.size() || (i < h_mono.size() && lex_greater(h_mono[i], gp[j].m))) {
          combine(h_mono[i], h_coeff[i], 0);
          ++i;
        } else if (i == h_mono.size() || lex_greater(gp[j].m, h_mono[i])) {
          combine(gp[j].m, mpz_class(0), gp[j].c);
          ++j;
        } else {
          combine(h_mono[i], h_coeff[i], gp[j].c);
          ++i;
          ++j;
        }
      }
      modulus *= pz;
      h_mono = std::move(mono);
      h_coeff = std::move(coeff);
    }

    // Symmetric representatives.
    mpz_class half = modulus / 2;
    std::vector<mpz_class> sym(h_coeff.size());
    mpz_class largest = 0;
    for (std::size_t k = 0; k < h_coeff.size(); ++k) {
      mpz_class v = h_coeff[k] % modulus;
      if (v < 0) v += modulus;
      if (v > half) v -= modulus;
      if (abs(v) > largest) largest = abs(v);
      sym[k] = std::move(v);
    }
    const bool stable = previous == sym;
    const bool small = largest * largest * (mpz_class(1) << 40) < modulus;
    previous = sym;
    if (stable || small) {
      Poly cand = primitive(from_local(h_mono, sym, order, session));
      if (divides(cand, a) && divides(cand, b)) return cand;
    }
  }
  throw Error(Errc::resource, "modular gcd exhausted its prime supply");
}

std::vector<Var> vars_of(std::uint32_t mask) {
  std::vector<Var> out;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if ((mask >> k) & 1u) out.push_back(Var{static_cast<std::uint8_t>(k)});
  }
  return out;
}

// Univariate image in v modulo f with every other variable at point[].
UPoly univariate_image(const Field& f, const Poly& p, Var v, const std::vector<std::vector<u64>>& powers) {
  UPoly u(p.degree(v) + 1, 0);
  for (const Term& t : p.terms()) {
    u64 c = f.from(t.coeff);
    for (std::size_t k = 0; k < kMaxVars && c != 0; ++k) {
      if (k == v.id || t.mono.exp[k] == 0) continue;
      c = f.mul(c, powers[k][t.mono.exp[k]]);
    }
    u[t.mono[v]] = f.add(u[t.mono[v]], c);
  }
  trim(u);
  return u;
}

// Integer substitution of the variables in `mask` (values[k] for id k).
Poly specialise(const Poly& p, std::uint32_t mask, const std::vector<mpz_class>& values) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    mpq_class c = t.coeff;
    Monomial m = t.mono;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (((mask >> k) & 1u) && m.exp[k] != 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), values[k].get_mpz_t(), m.exp[k]);
        c *= pw;
        m = m.without(Var{static_cast<std::uint8_t>(k)});
      }
    }
    terms.push_back(Term{m, std::move(c)});
  }
  return Poly::from_terms(p.session(), std::move(terms));
}

// gcd of primitive integer polynomials without monomial content.
Poly gcd_core(const Poly& a, const Poly& b, const SessionPtr& session) {
  if (a.is_constant() || b.is_constant()) return Poly(1, session);
  if (a == b) return a;
  const std::uint32_t sa = a.support(), sb = b.support();
  const std::uint32_t common = sa & sb;
  if (common == 0) return Poly(1, session);

  // Degree bounds from univariate images.
  const Field f{primes().front()};
  std::vector<int> bound(kMaxVars, 0);
  std::uint32_t active = 0;
  for (Var v : vars_of(common)) {
    int best = -1;
    for (int attempt = 0; attempt < 4 && best < 0; ++attempt) {
      std::vector<std::vector<u64>> powers(kMaxVars);
      for (std::size_t k = 0; k < kMaxVars; ++k) {
        if (!(((sa | sb) >> k) & 1u)) continue;
        unsigned top = std::max(a.degree(Var{static_cast<std::uint8_t>(k)}), b.degree(Var{static_cast<std::uint8_t>(k)}));
        u64 r = random_residue(f);
        powers[k].resize(top + 1);
        powers[k][0] = 1;
        for (unsigned e = 1; e <= top; ++e) powers[k][e] = f.mul(powers[k][e - 1], r);
      }
      UPoly ua = univariate_image(f, a, v, powers);
      UPoly ub = univariate_image(f, b, v, powers);
      if (udeg(ua) != static_cast<int>(a.degree(v)) || udeg(ub) != static_cast<int>(b.degree(v))) continue;
      best = udeg(ugcd(f, ua, ub));
    }
    if (best < 0) best = static_cast<int>(std::min(a.degree(v), b.degree(v)));
    bound[v.id] = best;
    if (best > 0) active |= 1u << v.id;
  }
  if (active == 0) return Poly(1, session);

  auto ordered = [&](std::uint32_t mask, const Poly& x, const Poly& y) {
    std::vector<Var> order = vars_of(mask);
    std::stable_sort(order.begin(), order.end(), [&](Var l, Var r) {
      return std::max(x.degree(l), y.degree(l)) > std::max(x.degree(r), y.degree(r));
    });
    return order;
  };
  auto local_bounds = [&](const std::vector<Var>& order) {
    std::vector<int> lb(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) lb[j] = bound[order[j].id];
    return lb;
  };

  const std::uint32_t others = (sa | sb) & ~active;
  if (others != 0) {
    std::uniform_int_distribution<long> pick(2, 1 << 16);
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<mpz_class> values(kMaxVars);
      for (Var v : vars_of(others)) values[v.id] = pick(rng()) * (pick(rng()) % 2 == 0 ? 1 : -1);
      Poly a2 = specialise(a, others, values);
      Poly b2 = specialise(b, others, values);
      bool preserved = true;
      for (Var v : vars_of(active)) {
        preserved &= a2.degree(v) == a.degree(v) && b2.degree(v) == b.degree(v);
      }
      if (!preserved) continue;
      a2 = primitive(a2);
      b2 = primitive(b2);
      std::vector<Var> order = ordered(active, a2, b2);
      for (std::size_t j = 0; j < order.size(); ++j) bound[order[j].id] = bound[order[j].id];
      Poly h = brown(a2, b2, order, local_bounds(order), session);
      if (h.is_constant()) return Poly(1, session);
      bool within = true;
      for (Var v : vars_of(active)) within &= static_cast<int>(h.degree(v)) <= bound[v.id];
      if (!within) continue;
      if (divides(h, a) && divides(h, b)) return h;
    }
  }
  // Exact route over every variable; bounds stay valid upper bounds.
  for (Var v : vars_of((sa | sb) & ~common)) bound[v.id] = 0;
  for (Var v : vars_of(others & common)) bound[v.id] = 0;
  std::vector<Var> order = ordered(sa | sb, a, b);
  std::vector<int> lb(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    Var v = order[j];
    lb[j] = static_cast<int>(std::min(a.degree(v), b.degree(v)));
    if ((active >> v.id) & 1u) lb[j] = bound[v.id];
  }
  return brown(a, b, order, lb, session);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  SessionPtr session = common_session(a.session(), b.session());
  if (a.has_generators() || b.has_generators()) {
    throw Error(Errc::invalid_argument, "gcd operands must be free of quadratic generators");
  }
  if (a.is_zero()) return b.monic().with_session(session);
  if (b.is_zero()) return a.monic().with_session(session);
  if (a.is_constant() || b.is_constant()) return Poly(1, session);

  const Monomial ma = a.min_monomial();
  const Monomial mb = b.min_monomial();
  const Monomial mg = ma.gcd(mb);
  Poly ra = primitive(a.divided_by_monomial(ma));
  Poly rb = primitive(b.divided_by_monomial(mb));
  Poly core = gcd_core(ra, rb, session);
  Poly result = mg.is_one() ? core : core.times(mg, 1);
  return result.monic().with_session(session);
}

Poly lcm(const Poly& a, const Poly& b) {
  Poly g = gcd(a, b);
  auto q = try_divide(a, g);
  if (!q) throw Error(Errc::internal_inconsistency, "gcd does not divide its operand");
  return (*q * b).monic();
}

}  // namespace planeprover::kernel
