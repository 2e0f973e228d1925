#pragma once

#include <compare>
#include <vector>

#include "planeprover/kernel/poly.hpp"

namespace planeprover::groebner {

using kernel::Poly;
using kernel::Var;

// Graded reverse lexicographic order on the listed variables: higher total
// degree wins; on ties the last variable whose exponents differ decides,
// the smaller exponent winning.
struct MonomialOrder {
  std::vector<Var> variables;
};

// Throws Errc::shape when the exponent vectors differ in length.
std::strong_ordering compare(const std::vector<unsigned>& a, const std::vector<unsigned>& b);

struct GroebnerBasis {
  std::vector<Poly> basis;  // reduced, monic, sorted by increasing leading monomial
  MonomialOrder order;
};

// Leading term of p under `order`. Precondition: p nonzero.
kernel::Term leading_term(const Poly& p, const MonomialOrder& order);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

// Reduced Groebner basis of the ideal generated by `generators`. Every
// generator must be a polynomial in the order's variables with rational
// coefficients. Deterministic for a given input sequence.
GroebnerBasis buchberger(const std::vector<Poly>& generators, const MonomialOrder& order);

// Remainder of full multivariate division of p by the basis.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const MonomialOrder& order);

}  // namespace planeprover::groebner
