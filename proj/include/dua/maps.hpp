#pragma once

#include "dua/structure.hpp"

#include <optional>
#include <string>

namespace dua {

// Images of the generators under a candidate (endo/iso)morphism. Source and
// target must share the coefficient field.
struct GenImages {
    SpecPtr source, target;
    Element u, d;
    std::vector<Element> t;

    static GenImages identity(const SpecPtr& spec);
};

Element apply_morphism(const GenImages& images, const Element& a);

struct HomCheckResult {
    bool ok = false;
    std::string relation; // name of the first violated relation
    Element witness;      // its nonzero image

    explicit operator bool() const { return ok; }
};

// True iff every defining relation of the source maps to zero.
HomCheckResult hom_check(const GenImages& images);

// Parameters of a scaling automorphism candidate: d -> lambda1*d,
// u -> lambda2*u, t -> a*t + b, with the swapped form d -> lambda1*u,
// u -> lambda2*d available when r = s^{-1}; b may be replaced by g(HK).
struct AutParams {
    FieldElem lambda1, lambda2, a;
    FieldElem b;
    std::optional<MultiPoly> g; // univariate, evaluated at HK in place of b
    bool swap = false;
};

// Builds the images, validates the phi compatibility constraint and runs
// hom_check; throws domain_error when either fails.
GenImages aut_from_params(const AutParams& params, const SpecPtr& spec);

enum class AffineOutcome { Found, None, Undecided };

struct AffineResult {
    AffineOutcome outcome = AffineOutcome::Undecided;
    FieldElem eta, a, b; // phi1(a*t + b) = eta * phi2(t) when Found

    bool found() const { return outcome == AffineOutcome::Found; }
};

// Decides phi1(a*t + b) = eta*phi2(t) over the given scalar field. Root
// extraction covers rational roots and roots of unity; outside that the
// result is Undecided, never a wrong negative.
AffineResult affine_equiv(const MultiPoly& phi1, const MultiPoly& phi2, const Field& field);

enum class IsoOutcome { Isomorphic, NotIsomorphic, Undecided };

struct IsoWitness {
    std::string case_tag; // "1", "3a".."3d", "4"
    FieldElem eta, a, b;
    GenImages images;
};

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::Undecided;
    std::string case_tag;
    std::optional<IsoWitness> witness;
    std::string note;
};

// The isomorphism decision for n = 1 algebras whose roots are not roots of
// unity; other regimes come back Undecided.
IsoResult iso_decide(const SpecPtr& spec1, const SpecPtr& spec2);

} // namespace dua
