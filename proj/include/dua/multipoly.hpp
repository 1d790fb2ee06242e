#pragma once

#include "dua/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace dua {

using ExpVec = std::vector<std::uint32_t>;

inline std::uint32_t exp_total(const ExpVec& e) {
    std::uint32_t t = 0;
    for (auto x : e) t += x;
    return t;
}

// Degree-lex order on exponent vectors of equal arity.
bool deglex_less(const ExpVec& a, const ExpVec& b);

// Sparse multivariate polynomial over Q(zeta_m) scalars: a map from exponent
// vectors to nonzero coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(unsigned arity = 0) : arity_(arity) {}
    static MultiPoly constant(unsigned arity, const Scalar& c);
    static MultiPoly variable(unsigned arity, unsigned idx);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // 0 for the zero polynomial
    unsigned total_degree() const; // 0 for zero
    unsigned degree_in(unsigned idx) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Scalar& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    void add_term(const ExpVec& e, const Scalar& c);

    Scalar eval(const std::vector<Scalar>& point) const;

    // p(a*x + b) for univariate p; a may be zero here (plain substitution).
    MultiPoly substitute_affine(const Scalar& a, const Scalar& b) const;

    // Leading term under deglex; polynomial must be nonzero.
    std::pair<ExpVec, Scalar> leading() const;

    const std::map<ExpVec, Scalar>& terms() const { return terms_; }

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const; // names t1..tn

private:
    unsigned arity_;
    std::map<ExpVec, Scalar> terms_;
};

// Exact division; throws domain_error if b does not divide a.
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);

// Gcd normalised to leading coefficient 1 (deglex); gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

} // namespace dua
