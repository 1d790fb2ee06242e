#include "dua/sampling.hpp"

namespace dua {

long Sampler::range(long lo, long hi) {
    if (lo >= hi) return lo;
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
}

Rat Sampler::small_rat(long num_bound, long den_bound) {
    long num = range(-num_bound, num_bound);
    long den = range(1, den_bound);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Scalar Sampler::scalar(const Field& f, bool nonzero) {
    unsigned m = f.cyclo_order();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Scalar v(small_rat());
        if (m > 1) {
            // Mix in a zeta term about half the time.
            if (range(0, 1)) {
                upoly::Poly coeffs = {small_rat(), small_rat(3, 2)};
                v = v + Scalar::from_coeffs(m, coeffs);
            }
        }
        if (!nonzero || !v.is_zero()) return v;
    }
    return Scalar(1);
}

FieldElem Sampler::field_elem(const Field& f, bool nonzero) {
    if (f.is_scalar_kind()) return f.elem(scalar(f, nonzero));
    // Constants most of the time, occasionally a linear numerator.
    if (range(0, 2) == 0) {
        MultiPoly num = MultiPoly::constant(f.arity(), scalar(f));
        num = num + MultiPoly::variable(f.arity(), static_cast<unsigned>(range(0, f.arity() - 1)))
                        .scale(scalar(f));
        if (num.is_zero() && nonzero) num = MultiPoly::constant(f.arity(), Scalar(1));
        return f.ratio(num, MultiPoly::constant(f.arity(), Scalar(1)));
    }
    FieldElem v = f.elem(scalar(f, nonzero));
    return v;
}

PBWMono Sampler::monomial(const AlgebraSpec& spec, long maxdeg) {
    const long W = spec.weight();
    PBWMono mono;
    mono.m.assign(spec.n(), 0);
    long budget = maxdeg;
    mono.j = static_cast<std::uint32_t>(range(0, budget / (2 * W)));
    budget -= 2 * W * mono.j;
    mono.i = static_cast<std::uint32_t>(range(0, budget / W));
    budget -= W * mono.i;
    mono.k = static_cast<std::uint32_t>(range(0, budget / W));
    budget -= W * mono.k;
    for (unsigned idx = 0; idx < spec.n() && budget > 0; ++idx) {
        mono.m[idx] = static_cast<std::uint32_t>(range(0, budget));
        budget -= mono.m[idx];
    }
    return mono;
}

Element Sampler::element(const SpecPtr& spec, unsigned max_terms, long maxdeg, bool nonzero) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Element e(spec);
        unsigned terms = static_cast<unsigned>(range(nonzero ? 1 : 0, max_terms));
        for (unsigned t = 0; t < terms; ++t)
            e.add_term(monomial(*spec, maxdeg), field_elem(spec->field()));
        if (!nonzero || !e.is_zero()) return e;
    }
    return Element::one(spec);
}

MultiPoly Sampler::polynomial(unsigned arity, unsigned maxdeg, unsigned max_terms,
                              const Field& coeff_field) {
    MultiPoly p(arity);
    unsigned terms = static_cast<unsigned>(range(0, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        ExpVec e(arity, 0);
        long budget = maxdeg;
        for (unsigned idx = 0; idx < arity && budget > 0; ++idx) {
            e[idx] = static_cast<std::uint32_t>(range(0, budget));
            budget -= e[idx];
        }
        p.add_term(e, scalar(coeff_field));
    }
    return p;
}

} // namespace dua
