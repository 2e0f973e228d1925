#pragma once

#include "planeprover/kernel/poly.hpp"

namespace planeprover::kernel {

// Greatest common divisor over Q of two polynomials free of quadratic
// generators. The result is monic (leading coefficient 1 in grevlex);
// gcd(0, 0) is 0 and gcd(p, 0) is monic(p).
//
// Strategy: per-variable degree bounds from univariate images modulo a large
// prime certify coprimality cheaply; variables the gcd cannot involve are
// specialised to random integers, the reduced problem goes through Brown's
// dense modular algorithm, and the candidate is accepted only after exact
// trial division of both inputs.
Poly gcd(const Poly& a, const Poly& b);

// Least common multiple, monic. Both inputs nonzero and generator-free.
Poly lcm(const Poly& a, const Poly& b);

}  // namespace planeprover::kernel
