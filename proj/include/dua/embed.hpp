#pragma once

#include "dua/algebra.hpp"

#include <map>
#include <memory>

namespace dua {

// The automorphism of R = K[x, y, t1..tn] with x -> y, y -> beta*x + alpha*y + phi,
// t_i -> t_i. Invertible exactly when beta != 0. Variables are ordered
// (x, y, t1..tn) inside arity n+2 polynomials.
class SigmaAut {
public:
    explicit SigmaAut(const SpecPtr& spec);

    unsigned arity() const { return arity_; }
    const MultiPoly& x_image() const { return sx_; }
    const MultiPoly& y_image() const { return sy_; }
    const MultiPoly& x_preimage() const { return ix_; }
    const MultiPoly& y_preimage() const { return iy_; }

    // sigma^power (negative powers use the inverse).
    MultiPoly apply(const MultiPoly& p, long power = 1) const;

private:
    unsigned arity_;
    MultiPoly sx_, sy_, ix_, iy_;
};

struct SkewRing {
    SpecPtr spec;
    SigmaAut sigma;

    static std::shared_ptr<const SkewRing> make(const SpecPtr& spec);

private:
    explicit SkewRing(const SpecPtr& s) : spec(s), sigma(s) {}
};

using SkewPtr = std::shared_ptr<const SkewRing>;

// Element of S = R[z^{+-1}; sigma] in the normal form sum_k z^k * r_k with the
// polynomial coefficients written on the right of the z powers; multiplication
// moves coefficients by r*z = z*sigma(r).
class SkewLaurentElem {
public:
    explicit SkewLaurentElem(SkewPtr ring) : ring_(std::move(ring)) {}

    static SkewLaurentElem zero(SkewPtr ring) { return SkewLaurentElem(std::move(ring)); }
    static SkewLaurentElem one(SkewPtr ring);
    static SkewLaurentElem z_power(SkewPtr ring, long k);
    static SkewLaurentElem from_poly(SkewPtr ring, MultiPoly p);

    const SkewPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<long, MultiPoly>& terms() const { return terms_; }

    SkewLaurentElem operator-() const;
    SkewLaurentElem operator+(const SkewLaurentElem& o) const;
    SkewLaurentElem operator-(const SkewLaurentElem& o) const;
    SkewLaurentElem operator*(const SkewLaurentElem& o) const;
    SkewLaurentElem scale(const Scalar& c) const;
    SkewLaurentElem pow(unsigned e) const;

    bool operator==(const SkewLaurentElem& o) const;
    bool operator!=(const SkewLaurentElem& o) const { return !(*this == o); }

    void add_term(long k, const MultiPoly& p);

    std::string str() const;

private:
    SkewPtr ring_;
    std::map<long, MultiPoly> terms_;
};

// The embedding u -> xz, d -> z^{-1}, t_i -> t_i, extended linearly.
SkewLaurentElem theta(const SkewPtr& ring, const Element& a);

struct ThetaReport {
    bool relations_vanish = false;
    bool multiplicative = false;
    unsigned pairs_checked = 0;
    bool images_independent = false;
    std::size_t image_count = 0;
    std::string note;

    bool ok() const { return relations_vanish && multiplicative && images_independent; }
};

// Relations map to zero, theta is multiplicative on random pairs, and the
// images of the spanning set (ud)^i (du)^j d^k t^m / (ud)^i (du)^j u^{k+1} t^m
// of weighted degree <= maxdeg stay linearly independent in S.
ThetaReport theta_check(const SpecPtr& spec, unsigned maxdeg, unsigned seed = 0,
                        unsigned pairs = 100);

// Quotient by (t_i - lambda_i): the image element and the classical target.
SpecPtr specialize_spec(const SpecPtr& spec, const std::vector<FieldElem>& lambda);
std::pair<Element, SpecPtr> specialize(const Element& a, const std::vector<FieldElem>& lambda);
Element specialize_into(const Element& a, const SpecPtr& target,
                        const std::vector<FieldElem>& lambda);

// The classical algebra over K(t1..tn) with gamma = phi.
SpecPtr localize_spec(const SpecPtr& spec);
Element localize_element(const Element& a, const SpecPtr& localized);

} // namespace dua
