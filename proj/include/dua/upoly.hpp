#pragma once

#include "dua/common.hpp"

#include <vector>

// Dense univariate polynomials over the rationals. Internal helper used for
// cyclotomic minimal polynomials and arithmetic modulo them.

namespace dua::upoly {

using Poly = std::vector<Rat>; // coefficient i of x^i; no trailing zeros

void trim(Poly& p);
bool is_zero(const Poly& p);
int degree(const Poly& p); // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Rat& c, const Poly& a);

// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Exact division; throws domain_error on a nonzero remainder.
Poly divexact(const Poly& a, const Poly& b);

// g = gcd(a,b) monic, with g = u*a + v*b.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// m-th cyclotomic polynomial, integer coefficients, degree phi(m).
Poly cyclotomic(unsigned m);

unsigned euler_phi(unsigned m);

} // namespace dua::upoly
