#pragma once

#include <random>
#include <string>
#include <vector>

#include "planeprover/kernel/numeric.hpp"
#include "planeprover/kernel/scalar.hpp"

namespace testing_support {

using planeprover::kernel::Point;
using planeprover::kernel::Poly;
using planeprover::kernel::Scalar;
using planeprover::kernel::Session;
using planeprover::kernel::SessionPtr;
using planeprover::kernel::Var;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  mpq_class rational(long bound = 9) {
    long den = integer(1, bound);
    mpq_class q(integer(-bound, bound), den);
    q.canonicalize();
    return q;
  }

  // Random polynomial in `vars` with at most `terms` terms and the given total degree.
  Poly poly(const SessionPtr& s, const std::vector<Var>& vars, unsigned degree, unsigned terms, long bound = 9) {
    Poly p(0, s);
    for (unsigned k = 0; k < terms; ++k) {
      Poly t(rational(bound), s);
      unsigned budget = static_cast<unsigned>(integer(0, degree));
      for (unsigned e = 0; e < budget; ++e) {
        t = t * Poly::variable(s, vars[integer(0, static_cast<long>(vars.size()) - 1)]);
      }
      p += t;
    }
    return p;
  }

  Poly nonzero_poly(const SessionPtr& s, const std::vector<Var>& vars, unsigned degree, unsigned terms) {
    for (;;) {
      Poly p = poly(s, vars, degree, terms);
      if (!p.is_zero()) return p;
    }
  }

  Point point(const std::vector<Var>& vars, long bound = 100) {
    Point out;
    for (Var v : vars) {
      mpq_class q;
      do {
        q = mpq_class(integer(-bound, bound), integer(1, bound));
        q.canonicalize();
      } while (q == 0);
      out.emplace_back(v, q);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Scalar var(const SessionPtr& s, const std::string& name) {
  return Scalar::variable(s, s->parameter(name));
}

}  // namespace testing_support
