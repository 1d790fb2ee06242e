#pragma once

#include "dua/common.hpp"
#include "dua/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dua {

// A scalar in Q(zeta_m), stored as a coefficient vector of length phi(m) in
// the power basis 1, zeta, ..., zeta^{phi(m)-1}, reduced modulo the m-th
// cyclotomic polynomial. Order m = 1 is the rationals. Values of order 1
// promote silently into any Q(zeta_m); two orders > 1 never mix.
class Scalar {
public:
    Scalar() : m_(1), c_(1, Rat(0)) {}
    explicit Scalar(const Rat& v) : m_(1), c_(1, v) {}
    explicit Scalar(long v) : m_(1), c_(1, Rat(v)) {}

    static Scalar zeta(unsigned m);
    static Scalar from_coeffs(unsigned m, upoly::Poly coeffs); // reduced mod Phi_m

    unsigned order() const { return m_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws domain_error on zero divisor
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Least k with (*this)^k == 1, among divisors of lcm(2, m); nullopt if none.
    std::optional<unsigned> root_of_unity_order() const;

    // Rendered as a polynomial expression in "zeta", e.g. "1 - 2*zeta^3".
    std::string str() const;

    const std::vector<Rat>& coeffs() const { return c_; }

private:
    Scalar(unsigned m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
    static const upoly::Poly& min_poly(unsigned m);
    static std::pair<Scalar, Scalar> promoted(const Scalar& a, const Scalar& b);

    unsigned m_;
    std::vector<Rat> c_; // length phi(m), dense
};

} // namespace dua
