#pragma once

#include "dua/multipoly.hpp"

#include <memory>
#include <optional>

namespace dua {

// Coefficient field of one algebra: Q, Q(zeta_m), or a rational function
// field Q(zeta_m)(t1..tn) (scalar order 1 for plain Q(t1..tn)).
struct FieldDescriptor {
    enum class Kind { Rational, Cyclotomic, RationalFunction };
    Kind kind = Kind::Rational;
    unsigned cyclo_order = 1; // m; also the scalar order under a function field
    unsigned arity = 0;       // number of function-field variables
    upoly::Poly min_poly;     // Phi_m (monic, integer coefficients)

    bool operator==(const FieldDescriptor& o) const {
        return kind == o.kind && cyclo_order == o.cyclo_order && arity == o.arity;
    }
};

class FieldElem;

// Shared handle to a field descriptor with element factories.
class Field {
public:
    Field() : Field(rational()) {}

    static Field rational();
    static Field cyclotomic(unsigned m);
    static Field rational_function(unsigned arity, unsigned scalar_order = 1);

    const FieldDescriptor& desc() const { return *d_; }
    FieldDescriptor::Kind kind() const { return d_->kind; }
    unsigned cyclo_order() const { return d_->cyclo_order; }
    unsigned arity() const { return d_->arity; }
    bool is_scalar_kind() const { return d_->kind != FieldDescriptor::Kind::RationalFunction; }

    bool operator==(const Field& o) const { return d_ == o.d_ || *d_ == *o.d_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem elem(long v) const;
    FieldElem elem(const Rat& v) const;
    FieldElem elem(const Scalar& s) const; // scalar embeds as a constant
    FieldElem zeta() const;                // requires a cyclotomic component (m > 1)
    FieldElem t_var(unsigned idx) const;   // rational-function fields only
    FieldElem ratio(const MultiPoly& num, const MultiPoly& den) const;

    std::string str() const;

private:
    explicit Field(std::shared_ptr<const FieldDescriptor> d) : d_(std::move(d)) {}
    std::shared_ptr<const FieldDescriptor> d_;
};

// One exact value in a field. Values are immutable; all operations return new
// elements in canonical reduced form.
class FieldElem {
public:
    FieldElem() : FieldElem(Field::rational(), Scalar(0)) {}
    FieldElem(Field f, Scalar s);
    FieldElem(Field f, MultiPoly num, MultiPoly den); // reduced on construction

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    // The value as a member of Q(zeta_m), when it is one (constants of a
    // function field included).
    std::optional<Scalar> scalar_value() const;
    bool is_rational() const;
    Rat rational_value() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Scalar& scalar() const { return s_; }

    std::string str() const;

private:
    void check_same(const FieldElem& o) const;
    void reduce();

    Field field_;
    Scalar s_;           // scalar kinds
    MultiPoly num_, den_; // rational-function kind
};

// Least m with x^m = 1 within the field's torsion bound, or nullopt.
// Non-constant rational functions are rejected.
std::optional<unsigned> root_of_unity_order(const FieldElem& x);

struct MultRelation {
    long i = 0, j = 0; // r^i * s^j = 1
};

// Decides multiplicative dependence of r and s. Returns nullopt when r^i s^j = 1
// forces i = j = 0; otherwise the nonzero relation minimising |i|+|j| (ties:
// i >= 0 first, then smaller j). Supported inputs: rationals and roots of
// unity; everything else raises unsupported_error.
std::optional<MultRelation> mult_dependence(const FieldElem& r, const FieldElem& s);

// p(a*t + b) for univariate p; a must be nonzero and both values scalar.
MultiPoly poly_substitute_affine(const MultiPoly& p, const FieldElem& a, const FieldElem& b);

} // namespace dua
