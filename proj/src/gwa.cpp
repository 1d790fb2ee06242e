#include "dua/gwa.hpp"

#include "dua/sampling.hpp"

#include <sstream>

namespace dua {

GWAElem GWAElem::one(SkewPtr ring, GwaConvention conv) {
    GWAElem e(std::move(ring), conv);
    e.add_term(0, MultiPoly::constant(e.ring_->sigma.arity(), Scalar(1)));
    return e;
}

GWAElem GWAElem::from_poly(SkewPtr ring, GwaConvention conv, MultiPoly p) {
    GWAElem e(std::move(ring), conv);
    e.add_term(0, std::move(p));
    return e;
}

GWAElem GWAElem::x_plus(SkewPtr ring, GwaConvention conv) {
    GWAElem e(std::move(ring), conv);
    e.add_term(1, MultiPoly::constant(e.ring_->sigma.arity(), Scalar(1)));
    return e;
}

GWAElem GWAElem::x_minus(SkewPtr ring, GwaConvention conv) {
    GWAElem e(std::move(ring), conv);
    e.add_term(-1, MultiPoly::constant(e.ring_->sigma.arity(), Scalar(1)));
    return e;
}

void GWAElem::add_term(long g, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, p);
        return;
    }
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
}

GWAElem GWAElem::operator-() const {
    GWAElem r(ring_, conv_);
    for (const auto& [g, p] : terms_) r.terms_.emplace(g, -p);
    return r;
}

GWAElem GWAElem::operator+(const GWAElem& o) const {
    GWAElem r = *this;
    for (const auto& [g, p] : o.terms_) r.add_term(g, p);
    return r;
}

GWAElem GWAElem::operator-(const GWAElem& o) const {
    GWAElem r = *this;
    for (const auto& [g, p] : o.terms_) r.add_term(g, -p);
    return r;
}

GWAElem GWAElem::operator*(const GWAElem& o) const {
    const SigmaAut& sigma = ring_->sigma;
    GWAElem r(ring_, conv_);
    MultiPoly x = MultiPoly::variable(sigma.arity(), 0);
    for (const auto& [g1in, p1] : terms_) {
        for (const auto& [g2in, p2] : o.terms_) {
            long g1 = g1in, g2 = g2in;
            // Move p2 across X^{g1}: X^+ twists by sigma; X^- by sigma^{-1}
            // (standard) or sigma (the printed variant).
            MultiPoly moved = p2;
            if (g1 > 0)
                moved = sigma.apply(p2, g1);
            else if (g1 < 0)
                moved = sigma.apply(p2, conv_ == GwaConvention::SigmaInverse ? g1 : -g1);
            MultiPoly acc = p1 * moved;
            // Cancel opposite powers one pair at a time.
            while (g1 > 0 && g2 < 0) {
                acc = acc * sigma.apply(x, g1); // X^{+a}X^{-b} = sigma^a(x) X^{+(a-1)}X^{-(b-1)}
                --g1;
                ++g2;
            }
            while (g1 < 0 && g2 > 0) {
                long e = conv_ == GwaConvention::SigmaInverse ? g1 + 1 : -(g1 + 1);
                acc = acc * sigma.apply(x, e); // X^{-a}X^{+b} = sigma^{-(a-1)}(x) X^{-(a-1)}X^{+(b-1)}
                ++g1;
                --g2;
            }
            r.add_term(g1 + g2, acc);
        }
    }
    return r;
}

GWAElem GWAElem::scale(const Scalar& c) const {
    GWAElem r(ring_, conv_);
    for (const auto& [g, p] : terms_) r.add_term(g, p.scale(c));
    return r;
}

GWAElem GWAElem::pow(unsigned e) const {
    GWAElem acc = one(ring_, conv_);
    for (unsigned idx = 0; idx < e; ++idx) acc = acc * *this;
    return acc;
}

std::string GWAElem::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = {"x", "y"};
    for (unsigned idx = 2; idx < ring_->sigma.arity(); ++idx)
        names.push_back("t" + std::to_string(idx - 1));
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, p] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << p.str(names) << ")";
        if (g > 0) out << "*Xp^" << g;
        if (g < 0) out << "*Xm^" << -g;
    }
    return out.str();
}

GWAElem gwa_image(const SkewPtr& ring, const GwaCombo& combo, const Element& a) {
    const unsigned arity = ring->sigma.arity();
    GWAElem U = combo.u_is_minus ? GWAElem::x_minus(ring, combo.convention)
                                 : GWAElem::x_plus(ring, combo.convention);
    GWAElem D = combo.u_is_minus ? GWAElem::x_plus(ring, combo.convention)
                                 : GWAElem::x_minus(ring, combo.convention);
    GWAElem DU = D * U;
    GWAElem out(ring, combo.convention);
    for (const auto& [mono, c] : a.terms()) {
        GWAElem term = GWAElem::one(ring, combo.convention);
        if (mono.i) term = term * U.pow(mono.i);
        if (mono.j) term = term * DU.pow(mono.j);
        if (mono.k) term = term * D.pow(mono.k);
        MultiPoly tpart = MultiPoly::constant(arity, Scalar(1));
        for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
            if (mono.m[idx])
                tpart = tpart *
                        MultiPoly::variable(arity, static_cast<unsigned>(idx + 2)).pow(mono.m[idx]);
        term = term * GWAElem::from_poly(ring, combo.convention, tpart);
        auto sv = c.scalar_value();
        if (!sv) throw unsupported_error("GWA images need scalar coefficients");
        out = out + term.scale(*sv);
    }
    return out;
}

GwaReport gwa_iso_check(const SpecPtr& spec, unsigned maxdeg) {
    if (spec->beta().is_zero()) throw domain_error("the GWA realisation requires beta != 0");
    GwaReport rep;
    auto ring = SkewRing::make(spec);
    const unsigned arity = ring->sigma.arity();
    MultiPoly x = MultiPoly::variable(arity, 0);
    MultiPoly sx = ring->sigma.apply(x);
    Scalar alpha = *spec->alpha().scalar_value();
    Scalar beta = *spec->beta().scalar_value();
    MultiPoly phi(arity);
    for (const auto& [mu, c] : spec->phi_poly().terms()) {
        ExpVec e(arity, 0);
        for (std::size_t idx = 0; idx < mu.size(); ++idx) e[idx + 2] = mu[idx];
        phi.add_term(e, c);
    }

    Sampler sampler(1);
    for (GwaConvention conv : {GwaConvention::SigmaInverse, GwaConvention::SigmaBoth}) {
        for (bool u_is_minus : {true, false}) {
            GwaComboResult res;
            res.combo = GwaCombo{conv, u_is_minus};
            GWAElem U = u_is_minus ? GWAElem::x_minus(ring, conv) : GWAElem::x_plus(ring, conv);
            GWAElem D = u_is_minus ? GWAElem::x_plus(ring, conv) : GWAElem::x_minus(ring, conv);
            GWAElem Phi = GWAElem::from_poly(ring, conv, phi);
            GWAElem rel1 = D * D * U - (D * U * D).scale(alpha) - (U * D * D).scale(beta) - Phi * D;
            GWAElem rel2 = D * U * U - (U * D * U).scale(alpha) - (U * U * D).scale(beta) - Phi * U;
            res.relations_ok = rel1.is_zero() && rel2.is_zero();

            GWAElem ud = U * D, du = D * U;
            GWAElem px = GWAElem::from_poly(ring, conv, x);
            GWAElem psx = GWAElem::from_poly(ring, conv, sx);
            res.ud_du_match = (ud == px && du == psx) || (ud == psx && du == px);

            res.multiplicative = true;
            if (res.relations_ok) {
                for (int trial = 0; trial < 20; ++trial) {
                    Element a = sampler.element(spec, 2, static_cast<long>(maxdeg) / 2);
                    Element b = sampler.element(spec, 2, static_cast<long>(maxdeg) / 2);
                    GwaCombo combo{conv, u_is_minus};
                    if (gwa_image(ring, combo, a * b) !=
                        gwa_image(ring, combo, a) * gwa_image(ring, combo, b)) {
                        res.multiplicative = false;
                        break;
                    }
                }
            } else {
                res.multiplicative = false;
            }

            std::ostringstream note;
            note << (conv == GwaConvention::SigmaInverse ? "X^- twists by sigma^{-1}"
                                                         : "X^- twists by sigma")
                 << ", u -> " << (u_is_minus ? "X^-" : "X^+") << ": relations "
                 << (res.relations_ok ? "hold" : "fail") << ", ud/du "
                 << (res.ud_du_match ? "match x/sigma(x)" : "mismatch");
            res.note = note.str();
            if (res.ok()) ++rep.passing;
            rep.combos.push_back(std::move(res));
        }
    }
    for (const auto& res : rep.combos)
        if (res.ok() && rep.passing == 1) rep.verified = res.combo;
    std::ostringstream note;
    note << rep.passing << " of 4 convention/assignment combinations verify all identities";
    rep.note = note.str();
    return rep;
}

} // namespace dua
