#include "planeprover/kernel/monomial.hpp"

#include <algorithm>

#include "planeprover/kernel/errors.hpp"

namespace planeprover::kernel {

Monomial Monomial::of(Var v, unsigned power) {
  if (power > 255) throw Error(Errc::resource, "exponent exceeds 255");
  Monomial m;
  m.exp[v.id] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    unsigned e = unsigned(exp[k]) + other.exp[k];
    if (e > 255) throw Error(Errc::resource, "exponent exceeds 255");
    r.exp[k] = static_cast<std::uint8_t>(e);
  }
  r.deg = static_cast<std::uint16_t>(deg + other.deg);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (exp[k] > other.exp[k]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r.exp[k] = static_cast<std::uint8_t>(other.exp[k] - exp[k]);
  r.deg = static_cast<std::uint16_t>(other.deg - deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    r.exp[k] = std::max(exp[k], other.exp[k]);
    d += r.exp[k];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    r.exp[k] = std::min(exp[k], other.exp[k]);
    d += r.exp[k];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r = *this;
  r.deg = static_cast<std::uint16_t>(r.deg - r.exp[v.id]);
  r.exp[v.id] = 0;
  return r;
}

Monomial Monomial::with(Var v, std::uint8_t e) const {
  Monomial r = *this;
  r.deg = static_cast<std::uint16_t>(r.deg - r.exp[v.id] + e);
  r.exp[v.id] = e;
  return r;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (exp[k] != 0) mask |= (1u << k);
  }
  return mask;
}

}  // namespace planeprover::kernel
