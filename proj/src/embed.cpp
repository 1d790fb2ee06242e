#include "dua/embed.hpp"

#include "dua/linalg.hpp"
#include "dua/sampling.hpp"

#include <set>
#include <sstream>

namespace dua {

namespace {

// Lift phi from arity n (t1..tn) to arity n+2 with variables (x, y, t1..tn).
MultiPoly lift_phi(const AlgebraSpec& spec) {
    MultiPoly out(spec.n() + 2);
    for (const auto& [mu, c] : spec.phi_poly().terms()) {
        ExpVec e(spec.n() + 2, 0);
        for (std::size_t idx = 0; idx < mu.size(); ++idx) e[idx + 2] = mu[idx];
        out.add_term(e, c);
    }
    return out;
}

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    MultiPoly acc(p.arity());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(p.arity(), c);
        for (unsigned idx = 0; idx < p.arity(); ++idx)
            if (e[idx] > 0) term = term * images[idx].pow(e[idx]);
        acc = acc + term;
    }
    return acc;
}

Scalar scalar_of(const FieldElem& v, const char* what) {
    auto s = v.scalar_value();
    if (!s) throw unsupported_error(std::string(what) + " requires scalar coefficients");
    return *s;
}

} // namespace

SigmaAut::SigmaAut(const SpecPtr& spec) : arity_(spec->n() + 2) {
    if (!spec->field().is_scalar_kind())
        throw unsupported_error("the skew embedding is built over scalar coefficient fields");
    if (spec->beta().is_zero())
        throw domain_error("sigma is not invertible: beta = 0");
    Scalar alpha = scalar_of(spec->alpha(), "sigma");
    Scalar beta = scalar_of(spec->beta(), "sigma");
    MultiPoly x = MultiPoly::variable(arity_, 0);
    MultiPoly y = MultiPoly::variable(arity_, 1);
    MultiPoly phi = lift_phi(*spec);
    sx_ = y;
    sy_ = x.scale(beta) + y.scale(alpha) + phi;
    // Inverse: y -> x and x -> (y - alpha*x - phi)/beta.
    ix_ = (y - x.scale(alpha) - phi).scale(beta.inverse());
    iy_ = x;
}

MultiPoly SigmaAut::apply(const MultiPoly& p, long power) const {
    if (p.arity() != arity_) throw domain_error("sigma arity mismatch");
    MultiPoly out = p;
    std::vector<MultiPoly> images;
    images.push_back(power >= 0 ? sx_ : ix_);
    images.push_back(power >= 0 ? sy_ : iy_);
    for (unsigned idx = 2; idx < arity_; ++idx) images.push_back(MultiPoly::variable(arity_, idx));
    long steps = power >= 0 ? power : -power;
    for (long stepc = 0; stepc < steps; ++stepc) out = compose(out, images);
    return out;
}

std::shared_ptr<const SkewRing> SkewRing::make(const SpecPtr& spec) {
    return std::shared_ptr<const SkewRing>(new SkewRing(spec));
}

SkewLaurentElem SkewLaurentElem::one(SkewPtr ring) {
    SkewLaurentElem e(ring);
    e.add_term(0, MultiPoly::constant(ring->sigma.arity(), Scalar(1)));
    return e;
}

SkewLaurentElem SkewLaurentElem::z_power(SkewPtr ring, long k) {
    SkewLaurentElem e(ring);
    e.add_term(k, MultiPoly::constant(ring->sigma.arity(), Scalar(1)));
    return e;
}

SkewLaurentElem SkewLaurentElem::from_poly(SkewPtr ring, MultiPoly p) {
    SkewLaurentElem e(ring);
    e.add_term(0, p);
    return e;
}

void SkewLaurentElem::add_term(long k, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, p);
        return;
    }
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
}

SkewLaurentElem SkewLaurentElem::operator-() const {
    SkewLaurentElem r(ring_);
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
}

SkewLaurentElem SkewLaurentElem::operator+(const SkewLaurentElem& o) const {
    SkewLaurentElem r = *this;
    for (const auto& [k, p] : o.terms_) r.add_term(k, p);
    return r;
}

SkewLaurentElem SkewLaurentElem::operator-(const SkewLaurentElem& o) const {
    SkewLaurentElem r = *this;
    for (const auto& [k, p] : o.terms_) r.add_term(k, -p);
    return r;
}

SkewLaurentElem SkewLaurentElem::operator*(const SkewLaurentElem& o) const {
    // (z^a p)(z^b q) = z^{a+b} sigma^b(p) q.
    SkewLaurentElem r(ring_);
    for (const auto& [a, p] : terms_)
        for (const auto& [b, q] : o.terms_) r.add_term(a + b, ring_->sigma.apply(p, b) * q);
    return r;
}

SkewLaurentElem SkewLaurentElem::scale(const Scalar& c) const {
    SkewLaurentElem r(ring_);
    for (const auto& [k, p] : terms_) r.add_term(k, p.scale(c));
    return r;
}

SkewLaurentElem SkewLaurentElem::pow(unsigned e) const {
    SkewLaurentElem acc = one(ring_);
    for (unsigned idx = 0; idx < e; ++idx) acc = acc * *this;
    return acc;
}

bool SkewLaurentElem::operator==(const SkewLaurentElem& o) const { return terms_ == o.terms_; }

std::string SkewLaurentElem::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = {"x", "y"};
    for (unsigned idx = 2; idx < ring_->sigma.arity(); ++idx)
        names.push_back("t" + std::to_string(idx - 1));
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, p] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << p.str(names);
            continue;
        }
        out << "z^" << k << "*(" << p.str(names) << ")";
    }
    return out.str();
}

SkewLaurentElem theta(const SkewPtr& ring, const Element& a) {
    if (!same_spec(ring->spec, a.spec())) throw domain_error("theta over a different algebra");
    const unsigned arity = ring->sigma.arity();
    // x*z normalises to z*sigma(x) = z*y.
    SkewLaurentElem U = SkewLaurentElem::from_poly(ring, MultiPoly::variable(arity, 0)) *
                        SkewLaurentElem::z_power(ring, 1);
    SkewLaurentElem D = SkewLaurentElem::z_power(ring, -1);
    SkewLaurentElem Y = SkewLaurentElem::from_poly(ring, MultiPoly::variable(arity, 1));
    SkewLaurentElem out(ring);
    for (const auto& [mono, c] : a.terms()) {
        SkewLaurentElem term = SkewLaurentElem::one(ring);
        if (mono.i) term = term * U.pow(mono.i);
        if (mono.j) term = term * Y.pow(mono.j);
        if (mono.k) term = term * D.pow(mono.k);
        MultiPoly tpart = MultiPoly::constant(arity, Scalar(1));
        for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
            if (mono.m[idx])
                tpart = tpart * MultiPoly::variable(arity, static_cast<unsigned>(idx + 2)).pow(mono.m[idx]);
        term = term * SkewLaurentElem::from_poly(ring, tpart);
        term = term.scale(scalar_of(c, "theta"));
        out = out + term;
    }
    return out;
}

namespace {

// theta(u) = x*z as a z-left normal form.
SkewLaurentElem theta_u(const SkewPtr& ring) {
    return SkewLaurentElem::from_poly(ring, MultiPoly::variable(ring->sigma.arity(), 0)) *
           SkewLaurentElem::z_power(ring, 1);
}

} // namespace

ThetaReport theta_check(const SpecPtr& spec, unsigned maxdeg, unsigned seed, unsigned pairs) {
    ThetaReport rep;
    if (spec->beta().is_zero()) throw domain_error("theta requires beta != 0");
    auto ring = SkewRing::make(spec);
    const unsigned arity = ring->sigma.arity();
    SkewLaurentElem U = theta_u(ring);
    SkewLaurentElem D = SkewLaurentElem::z_power(ring, -1);
    SkewLaurentElem Phi = SkewLaurentElem::from_poly(ring, lift_phi(*spec));
    Scalar alpha = *spec->alpha().scalar_value();
    Scalar beta = *spec->beta().scalar_value();

    SkewLaurentElem rel1 =
        D * D * U - (D * U * D).scale(alpha) - (U * D * D).scale(beta) - Phi * D;
    SkewLaurentElem rel2 =
        D * U * U - (U * D * U).scale(alpha) - (U * U * D).scale(beta) - Phi * U;
    rep.relations_vanish = rel1.is_zero() && rel2.is_zero();

    Sampler sampler(seed);
    rep.multiplicative = true;
    for (unsigned p = 0; p < pairs; ++p) {
        Element a = sampler.element(spec, 3, 3);
        Element b = sampler.element(spec, 3, 3);
        if (theta(ring, a * b) != theta(ring, a) * theta(ring, b)) {
            rep.multiplicative = false;
            break;
        }
        ++rep.pairs_checked;
    }

    // Images of (ud)^i (du)^j d^k t^m and (ud)^i (du)^j u^{k+1} t^m, weighted
    // degree <= maxdeg, computed directly in S.
    std::vector<SkewLaurentElem> images;
    const long W = spec->weight();
    MultiPoly x = MultiPoly::variable(arity, 0);
    MultiPoly y = MultiPoly::variable(arity, 1);
    auto push_family = [&](bool u_tail) {
        for (long i = 0; 2 * W * i <= static_cast<long>(maxdeg); ++i)
            for (long j = 0; 2 * W * (i + j) <= static_cast<long>(maxdeg); ++j)
                for (long k = 0;; ++k) {
                    long tail = u_tail ? k + 1 : k;
                    long used = 2 * W * (i + j) + W * tail;
                    if (used > static_cast<long>(maxdeg)) break;
                    long trem = static_cast<long>(maxdeg) - used;
                    std::vector<ExpVec> tvecs;
                    ExpVec m(spec->n(), 0);
                    while (true) {
                        tvecs.push_back(m);
                        if (spec->n() == 0) break;
                        std::size_t pos = 0;
                        while (pos < spec->n()) {
                            ++m[pos];
                            long total = 0;
                            for (auto v : m) total += v;
                            if (total <= trem) break;
                            m[pos] = 0;
                            ++pos;
                        }
                        if (pos == spec->n()) break;
                    }
                    for (const auto& tv : tvecs) {
                        MultiPoly base = x.pow(static_cast<unsigned>(i)) *
                                         y.pow(static_cast<unsigned>(j));
                        for (std::size_t idx = 0; idx < tv.size(); ++idx)
                            if (tv[idx])
                                base = base *
                                       MultiPoly::variable(arity, static_cast<unsigned>(idx + 2))
                                           .pow(tv[idx]);
                        SkewLaurentElem img = SkewLaurentElem::from_poly(ring, base);
                        if (u_tail)
                            img = img * U.pow(static_cast<unsigned>(tail));
                        else if (k)
                            img = img * D.pow(static_cast<unsigned>(k));
                        images.push_back(img);
                    }
                }
    };
    push_family(false);
    push_family(true);
    rep.image_count = images.size();

    // Coordinates over (z power, R monomial) pairs.
    std::set<std::pair<long, ExpVec>> support;
    for (const auto& img : images)
        for (const auto& [k, p] : img.terms())
            for (const auto& [e, c] : p.terms()) support.insert({k, e});
    std::vector<std::pair<long, ExpVec>> index(support.begin(), support.end());
    const Field& field = spec->field();
    linalg::Mat mat;
    for (const auto& img : images) {
        linalg::Vec row(index.size(), field.zero());
        for (const auto& [k, p] : img.terms())
            for (const auto& [e, c] : p.terms()) {
                auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(k, e));
                row[static_cast<std::size_t>(it - index.begin())] = field.elem(c);
            }
        mat.push_back(std::move(row));
    }
    rep.images_independent = linalg::rank(std::move(mat)) == images.size();

    std::ostringstream note;
    note << "relations " << (rep.relations_vanish ? "vanish" : "DO NOT vanish") << "; "
         << rep.pairs_checked << " random pairs multiplicative; " << rep.image_count
         << " spanning-set images " << (rep.images_independent ? "independent" : "DEPENDENT");
    rep.note = note.str();
    return rep;
}

SpecPtr specialize_spec(const SpecPtr& spec, const std::vector<FieldElem>& lambda) {
    if (lambda.size() != spec->n()) throw domain_error("lambda arity mismatch");
    FieldElem gamma = spec->field().zero();
    for (const auto& [mu, c] : spec->phi_terms()) {
        FieldElem term = c;
        for (std::size_t idx = 0; idx < mu.size(); ++idx)
            if (mu[idx]) term = term * lambda[idx].pow(mu[idx]);
        gamma = gamma + term;
    }
    return AlgebraSpec::make_classical(spec->field(), spec->alpha(), spec->beta(), spec->r(),
                                       spec->s(), gamma);
}

Element specialize_into(const Element& a, const SpecPtr& target,
                        const std::vector<FieldElem>& lambda) {
    if (lambda.size() != a.spec()->n()) throw domain_error("lambda arity mismatch");
    Element out(target);
    for (const auto& [mono, c] : a.terms()) {
        FieldElem coeff = c;
        for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
            if (mono.m[idx]) coeff = coeff * lambda[idx].pow(mono.m[idx]);
        PBWMono image;
        image.i = mono.i;
        image.j = mono.j;
        image.k = mono.k;
        out.add_term(image, coeff);
    }
    return out;
}

std::pair<Element, SpecPtr> specialize(const Element& a, const std::vector<FieldElem>& lambda) {
    SpecPtr target = specialize_spec(a.spec(), lambda);
    return {specialize_into(a, target, lambda), target};
}

SpecPtr localize_spec(const SpecPtr& spec) {
    if (!spec->field().is_scalar_kind())
        throw unsupported_error("the algebra is already defined over a function field");
    if (spec->n() == 0) throw domain_error("no t variables to invert");
    Field target = Field::rational_function(spec->n(), spec->field().cyclo_order());
    auto lift = [&](const FieldElem& v) { return target.elem(*v.scalar_value()); };
    std::optional<FieldElem> r, s;
    if (spec->r()) r = lift(*spec->r());
    if (spec->s()) s = lift(*spec->s());
    FieldElem gamma = target.ratio(spec->phi_poly(), MultiPoly::constant(spec->n(), Scalar(1)));
    return AlgebraSpec::make_classical(target, lift(spec->alpha()), lift(spec->beta()), r, s, gamma);
}

Element localize_element(const Element& a, const SpecPtr& localized) {
    const Field& target = localized->field();
    unsigned n = a.spec()->n();
    if (target.arity() != n) throw domain_error("localized field arity mismatch");
    Element out(localized);
    for (const auto& [mono, c] : a.terms()) {
        MultiPoly num = MultiPoly::constant(n, *c.scalar_value());
        for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
            if (mono.m[idx])
                num = num * MultiPoly::variable(n, static_cast<unsigned>(idx)).pow(mono.m[idx]);
        PBWMono image;
        image.i = mono.i;
        image.j = mono.j;
        image.k = mono.k;
        out.add_term(image, target.ratio(num, MultiPoly::constant(n, Scalar(1))));
    }
    return out;
}

} // namespace dua
