#pragma once

#include "dua/embed.hpp"

#include <optional>

namespace dua {

// Commutation rule for X^- against R: sigma^{-1} is the standard convention;
// SigmaBoth is the variant with sigma on both generators.
enum class GwaConvention { SigmaInverse, SigmaBoth };

struct GwaCombo {
    GwaConvention convention = GwaConvention::SigmaInverse;
    bool u_is_minus = true; // u -> X^-, d -> X^+ when true
};

// Element of the generalized Weyl algebra R(sigma, x): finite sum of
// p*(X^+)^g (g > 0), p*(X^-)^{-g} (g < 0), and p (g = 0), coefficients on the
// left. X^- X^+ = x and X^+ X^- = sigma(x).
class GWAElem {
public:
    GWAElem(SkewPtr ring, GwaConvention conv) : ring_(std::move(ring)), conv_(conv) {}

    static GWAElem one(SkewPtr ring, GwaConvention conv);
    static GWAElem from_poly(SkewPtr ring, GwaConvention conv, MultiPoly p);
    static GWAElem x_plus(SkewPtr ring, GwaConvention conv);
    static GWAElem x_minus(SkewPtr ring, GwaConvention conv);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, MultiPoly>& terms() const { return terms_; }

    GWAElem operator-() const;
    GWAElem operator+(const GWAElem& o) const;
    GWAElem operator-(const GWAElem& o) const;
    GWAElem operator*(const GWAElem& o) const;
    GWAElem scale(const Scalar& c) const;
    GWAElem pow(unsigned e) const;

    bool operator==(const GWAElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const GWAElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(long g, const MultiPoly& p);

    SkewPtr ring_;
    GwaConvention conv_;
    std::map<long, MultiPoly> terms_;
};

struct GwaComboResult {
    GwaCombo combo;
    bool relations_ok = false;
    bool ud_du_match = false; // {ud, du} maps onto {x, sigma(x)} consistently
    bool multiplicative = false;
    std::string note;

    bool ok() const { return relations_ok && ud_du_match && multiplicative; }
};

struct GwaReport {
    std::vector<GwaComboResult> combos;
    std::optional<GwaCombo> verified; // set when exactly the expected single combo works
    int passing = 0;
    std::string note;

    bool ok() const { return passing >= 1; }
};

// Tries both conventions and both generator assignments; records which
// combinations satisfy all defining identities.
GwaReport gwa_iso_check(const SpecPtr& spec, unsigned maxdeg);

// The generator images of one combo, for use in tests.
GWAElem gwa_image(const SkewPtr& ring, const GwaCombo& combo, const Element& a);

} // namespace dua
