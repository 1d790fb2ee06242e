#pragma once

#include "dua/algebra.hpp"

#include <random>

namespace dua {

// Deterministic value generator for property batches; everything is driven by
// the seed so failures replay.
class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    long range(long lo, long hi); // inclusive bounds
    Rat small_rat(long num_bound = 5, long den_bound = 3);
    Scalar scalar(const Field& f, bool nonzero = false);
    FieldElem field_elem(const Field& f, bool nonzero = false);
    PBWMono monomial(const AlgebraSpec& spec, long maxdeg);
    Element element(const SpecPtr& spec, unsigned max_terms, long maxdeg, bool nonzero = false);
    MultiPoly polynomial(unsigned arity, unsigned maxdeg, unsigned max_terms,
                         const Field& coeff_field);

private:
    std::mt19937_64 rng_;
};

} // namespace dua
