#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>

namespace planeprover::kernel {

// A session never holds more indeterminates (geometric, parameters and
// quadratic generators together) than this.
inline constexpr std::size_t kMaxVars = 32;

struct Var {
  std::uint8_t id = 0;
  friend constexpr auto operator<=>(Var, Var) = default;
};

// Dense exponent vector indexed by Var::id, with a cached total degree.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  static Monomial of(Var v, unsigned power = 1);

  std::uint8_t operator[](Var v) const { return exp[v.id]; }
  bool is_one() const { return deg == 0; }

  // Throws Errc::resource if an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial without(Var v) const;
  Monomial with(Var v, std::uint8_t e) const;
  std::uint32_t support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.exp == b.exp;
  }
};

// Graded reverse lexicographic order by variable id: the global term order.
inline std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg <=> b.deg;
  for (std::size_t k = kMaxVars; k-- > 0;) {
    if (a.exp[k] != b.exp[k]) return b.exp[k] <=> a.exp[k];
  }
  return std::strong_ordering::equal;
}

// Pure lexicographic order by variable id (variable 0 most significant).
inline std::strong_ordering lex(const Monomial& a, const Monomial& b) {
  int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
  return c <=> 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t words[kMaxVars / 8];
    std::memcpy(words, m.exp.data(), kMaxVars);
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xFF51AFD7ED558CCDULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace planeprover::kernel
