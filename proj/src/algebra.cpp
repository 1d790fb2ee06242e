#include "dua/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace dua {

namespace {

std::atomic<std::size_t> g_straighten_cap{10000};

FieldElem solve_root_discriminant(const Field& field, const FieldElem& alpha, const FieldElem& beta,
                                  bool& found) {
    // Square root of alpha^2 + 4*beta when it is the square of a rational.
    FieldElem disc = alpha * alpha + beta.field().elem(4) * beta;
    found = false;
    if (disc.is_zero()) {
        found = true;
        return field.zero();
    }
    auto sv = disc.scalar_value();
    if (!sv || !sv->is_rational()) return field.zero();
    Rat q = sv->rational_value();
    if (q < 0) return field.zero();
    Int num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return field.zero();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    found = true;
    Rat root(rn, rd);
    root.canonicalize();
    return field.elem(root);
}

} // namespace

SpecPtr AlgebraSpec::make(unsigned n, Field field, FieldElem alpha, FieldElem beta,
                          std::optional<FieldElem> r, std::optional<FieldElem> s, MultiPoly phi) {
    if (!field.is_scalar_kind()) {
        if (n != 0)
            throw domain_error("rational function coefficients require n = 0; use make_classical");
        if (!phi.is_constant()) throw domain_error("phi must be constant over a function field");
        return make_classical(field, std::move(alpha), std::move(beta), std::move(r), std::move(s),
                              field.elem(phi.constant_value()));
    }
    if (phi.arity() != n) throw domain_error("phi arity does not match n");
    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->memo_cap_ = g_straighten_cap.load();
    spec->n_ = n;
    spec->field_ = field;
    spec->alpha_ = std::move(alpha);
    spec->beta_ = std::move(beta);
    spec->phi_ = std::move(phi);
    spec->phi_degree_ = spec->phi_.total_degree();
    spec->weight_ = std::max(spec->phi_degree_, 1u);
    for (const auto& [e, c] : spec->phi_.terms()) spec->phi_terms_.emplace_back(e, field.elem(c));

    if (r && s) {
        if (*r + *s != spec->alpha_ || *r * *s != -spec->beta_)
            throw domain_error("roots r, s inconsistent with alpha, beta");
        spec->r_ = std::move(r);
        spec->s_ = std::move(s);
    } else if (r || s) {
        throw domain_error("provide both roots r, s or neither");
    } else {
        bool found = false;
        FieldElem root = solve_root_discriminant(field, spec->alpha_, spec->beta_, found);
        if (found) {
            FieldElem two = field.elem(2);
            spec->r_ = (spec->alpha_ + root) / two;
            spec->s_ = (spec->alpha_ - root) / two;
        }
    }
    return spec;
}

SpecPtr AlgebraSpec::make_classical(Field field, FieldElem alpha, FieldElem beta,
                                    std::optional<FieldElem> r, std::optional<FieldElem> s,
                                    FieldElem gamma) {
    if (field.is_scalar_kind()) {
        MultiPoly phi(0);
        auto sv = gamma.scalar_value();
        if (!sv) throw domain_error("gamma must be a field constant");
        phi.add_term(ExpVec{}, *sv);
        return make(0, field, std::move(alpha), std::move(beta), std::move(r), std::move(s),
                    std::move(phi));
    }
    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->memo_cap_ = g_straighten_cap.load();
    spec->n_ = 0;
    spec->field_ = field;
    spec->alpha_ = std::move(alpha);
    spec->beta_ = std::move(beta);
    spec->phi_ = MultiPoly(0);
    spec->phi_degree_ = 0;
    spec->weight_ = 1;
    if (!gamma.is_zero()) spec->phi_terms_.emplace_back(ExpVec{}, gamma);
    if (r && s) {
        if (*r + *s != spec->alpha_ || *r * *s != -spec->beta_)
            throw domain_error("roots r, s inconsistent with alpha, beta");
        spec->r_ = std::move(r);
        spec->s_ = std::move(s);
    } else if (r || s) {
        throw domain_error("provide both roots r, s or neither");
    } else {
        bool found = false;
        FieldElem root = solve_root_discriminant(field, spec->alpha_, spec->beta_, found);
        if (found) {
            FieldElem two = field.elem(2);
            spec->r_ = (spec->alpha_ + root) / two;
            spec->s_ = (spec->alpha_ - root) / two;
        }
    }
    return spec;
}

const MultiPoly& AlgebraSpec::phi_poly() const {
    if (!field_.is_scalar_kind())
        throw domain_error("phi is a field constant here, not a scalar polynomial");
    return phi_;
}

FieldElem AlgebraSpec::gamma() const {
    if (phi_terms_.empty()) return field_.zero();
    if (phi_degree_ != 0) throw domain_error("phi is not constant");
    return phi_terms_.front().second;
}

void AlgebraSpec::set_default_straighten_cap(std::size_t cap) { g_straighten_cap.store(cap); }

long AlgebraSpec::wdeg(const PBWMono& mono) const {
    long w = weight_;
    return w * mono.i + 2 * w * mono.j + w * mono.k + static_cast<long>(exp_total(mono.m));
}

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
    return n_ == o.n_ && field_ == o.field_ && alpha_ == o.alpha_ && beta_ == o.beta_ &&
           r_ == o.r_ && s_ == o.s_ && phi_terms_ == o.phi_terms_;
}

std::string AlgebraSpec::str() const {
    std::ostringstream out;
    out << "A(n=" << n_ << ", " << field_.str() << ", alpha=" << alpha_.str()
        << ", beta=" << beta_.str();
    if (has_roots()) out << ", r=" << r_->str() << ", s=" << s_->str();
    out << ", phi=";
    if (field_.is_scalar_kind())
        out << phi_.str();
    else
        out << gamma().str();
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Rewriting engine.

namespace {

using Letters = std::vector<std::uint8_t>; // 0 = u, 1 = d

struct CoreKey {
    Letters w;
    ExpVec t;

    bool operator==(const CoreKey& o) const { return w == o.w && t == o.t; }
};

// Processes largest terms first; rewrites strictly decrease this order.
struct CoreKeyGreater {
    unsigned weight = 1;
    bool operator()(const CoreKey& a, const CoreKey& b) const {
        unsigned long da = a.w.size() * weight + exp_total(a.t);
        unsigned long db = b.w.size() * weight + exp_total(b.t);
        if (da != db) return da > db;
        if (a.w.size() != b.w.size()) return a.w.size() > b.w.size();
        if (a.w != b.w) return a.w > b.w;
        return a.t > b.t;
    }
};

bool pattern_at(const Letters& w, std::size_t p) {
    // ddu or duu starting at p.
    return w[p] == 1 && ((w[p + 1] == 1 && w[p + 2] == 0) || (w[p + 1] == 0 && w[p + 2] == 0));
}

int find_pattern(const Letters& w, Strategy st) {
    if (w.size() < 3) return -1;
    if (st == Strategy::Leftmost) {
        for (std::size_t p = 0; p + 2 < w.size(); ++p)
            if (pattern_at(w, p)) return static_cast<int>(p);
    } else {
        for (std::size_t p = w.size() - 2; p-- > 0;)
            if (pattern_at(w, p)) return static_cast<int>(p);
    }
    return -1;
}

PBWMono parse_normal(const Letters& w, ExpVec t) {
    PBWMono mono;
    mono.m = std::move(t);
    std::size_t p = 0, sz = w.size();
    while (p < sz && w[p] == 0) {
        ++mono.i;
        ++p;
    }
    while (p + 1 < sz && w[p] == 1 && w[p + 1] == 0) {
        ++mono.j;
        p += 2;
    }
    while (p < sz && w[p] == 1) {
        ++mono.k;
        ++p;
    }
    if (p != sz) throw error("internal: irreducible word is not a basis monomial");
    return mono;
}

class CoreReducer {
public:
    CoreReducer(SpecPtr spec, bool use_blocks, Strategy strategy)
        : spec_(std::move(spec)), use_blocks_(use_blocks), strategy_(strategy),
          pending_(CoreKeyGreater{spec_->weight()}), result_(spec_) {}

    void push(Letters w, ExpVec t, FieldElem c) {
        if (c.is_zero()) return;
        CoreKey key{std::move(w), std::move(t)};
        auto it = pending_.find(key);
        if (it == pending_.end()) {
            pending_.emplace(std::move(key), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) pending_.erase(it);
    }

    Element run() {
        while (!pending_.empty()) {
            auto node = pending_.extract(pending_.begin());
            const CoreKey& key = node.key();
            const FieldElem& c = node.mapped();
            int p = find_pattern(key.w, strategy_);
            if (p < 0) {
                result_.add_term(parse_normal(key.w, key.t), c);
                continue;
            }
            if (use_blocks_)
                rewrite_block(key, c, static_cast<std::size_t>(p));
            else
                rewrite_single(key, c, static_cast<std::size_t>(p));
        }
        return std::move(result_);
    }

private:
    void splice_push(const CoreKey& key, std::size_t from, std::size_t to, const Letters& mid,
                     const ExpVec& tshift, FieldElem c) {
        Letters w;
        w.reserve(key.w.size() - (to - from) + mid.size());
        w.insert(w.end(), key.w.begin(), key.w.begin() + from);
        w.insert(w.end(), mid.begin(), mid.end());
        w.insert(w.end(), key.w.begin() + to, key.w.end());
        ExpVec t = key.t;
        for (std::size_t idx = 0; idx < tshift.size(); ++idx) t[idx] += tshift[idx];
        push(std::move(w), std::move(t), std::move(c));
    }

    void rewrite_single(const CoreKey& key, const FieldElem& c, std::size_t p) {
        const ExpVec no_shift(spec_->n(), 0);
        bool ddu = key.w[p + 1] == 1;
        if (ddu) {
            splice_push(key, p, p + 3, {1, 0, 1}, no_shift, spec_->alpha() * c);
            splice_push(key, p, p + 3, {0, 1, 1}, no_shift, spec_->beta() * c);
            for (const auto& [mu, cphi] : spec_->phi_terms())
                splice_push(key, p, p + 3, {1}, mu, cphi * c);
        } else {
            splice_push(key, p, p + 3, {0, 1, 0}, no_shift, spec_->alpha() * c);
            splice_push(key, p, p + 3, {0, 0, 1}, no_shift, spec_->beta() * c);
            for (const auto& [mu, cphi] : spec_->phi_terms())
                splice_push(key, p, p + 3, {0}, mu, cphi * c);
        }
    }

    void rewrite_block(const CoreKey& key, const FieldElem& c, std::size_t p) {
        // Maximal d-run then u-run around the found pattern.
        std::size_t ls = p;
        while (ls > 0 && key.w[ls - 1] == 1) --ls;
        std::size_t de = p;
        while (de < key.w.size() && key.w[de] == 1) ++de;
        std::size_t re = de;
        while (re < key.w.size() && key.w[re] == 0) ++re;
        unsigned a = static_cast<unsigned>(de - ls);
        unsigned b = static_cast<unsigned>(re - de);
        Element nf = spec_->straighten(a, b);
        for (const auto& [mono, c2] : nf.terms()) {
            Letters mid;
            mid.reserve(mono.i + 2 * mono.j + mono.k);
            mid.insert(mid.end(), mono.i, 0);
            for (std::uint32_t y = 0; y < mono.j; ++y) {
                mid.push_back(1);
                mid.push_back(0);
            }
            mid.insert(mid.end(), mono.k, 1);
            splice_push(key, ls, re, mid, mono.m, c2 * c);
        }
    }

    SpecPtr spec_;
    bool use_blocks_;
    Strategy strategy_;
    std::map<CoreKey, FieldElem, CoreKeyGreater> pending_;
    Element result_;
};

// Splits a word over {u, d, t_i} into its central t part and the u/d core.
std::pair<Letters, ExpVec> split_word(const Word& w, const AlgebraSpec& spec) {
    Letters core;
    ExpVec t(spec.n(), 0);
    for (int letter : w.letters) {
        if (letter == 0 || letter == 1) {
            core.push_back(static_cast<std::uint8_t>(letter));
        } else {
            unsigned idx = static_cast<unsigned>(letter - 2);
            if (idx >= spec.n()) throw domain_error("t index out of range in word");
            ++t[idx];
        }
    }
    return {std::move(core), std::move(t)};
}

} // namespace

Element AlgebraSpec::straighten(unsigned a, unsigned b) const {
    PBWMono mono;
    SpecPtr self = shared_from_this();
    if (a == 0 || b == 0 || (a == 1 && b == 1)) {
        if (a == 0)
            mono.i = b;
        else if (b == 0)
            mono.k = a;
        else
            mono.j = 1;
        mono.m.assign(n_, 0);
        return Element::monomial(self, mono, field_.one());
    }
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find({a, b});
        if (it != memo_.end()) return *it->second;
    }
    Word w{field_.one(), {}};
    w.letters.insert(w.letters.end(), a, 1);
    w.letters.insert(w.letters.end(), b, 0);
    Element nf = reduce_word_basic(w, self, Strategy::Leftmost);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        if (memo_.size() < memo_cap_) memo_.emplace(std::make_pair(a, b), std::make_shared<const Element>(nf));
    }
    return nf;
}

// ---------------------------------------------------------------------------
// Element.

Element Element::one(SpecPtr spec) {
    FieldElem c = spec->field().one();
    PBWMono mono;
    mono.m.assign(spec->n(), 0);
    return monomial(std::move(spec), std::move(mono), std::move(c));
}

Element Element::monomial(SpecPtr spec, PBWMono mono, FieldElem coeff) {
    if (mono.m.size() != spec->n()) throw domain_error("monomial t arity mismatch");
    Element e(std::move(spec));
    e.add_term(mono, coeff);
    return e;
}

Element Element::gen_u(SpecPtr spec) {
    PBWMono mono;
    mono.i = 1;
    mono.m.assign(spec->n(), 0);
    FieldElem c = spec->field().one();
    return monomial(std::move(spec), std::move(mono), std::move(c));
}

Element Element::gen_d(SpecPtr spec) {
    PBWMono mono;
    mono.k = 1;
    mono.m.assign(spec->n(), 0);
    FieldElem c = spec->field().one();
    return monomial(std::move(spec), std::move(mono), std::move(c));
}

Element Element::gen_du(SpecPtr spec) {
    PBWMono mono;
    mono.j = 1;
    mono.m.assign(spec->n(), 0);
    FieldElem c = spec->field().one();
    return monomial(std::move(spec), std::move(mono), std::move(c));
}

Element Element::gen_t(SpecPtr spec, unsigned idx) {
    if (idx >= spec->n()) throw domain_error("t index out of range");
    PBWMono mono;
    mono.m.assign(spec->n(), 0);
    mono.m[idx] = 1;
    FieldElem c = spec->field().one();
    return monomial(std::move(spec), std::move(mono), std::move(c));
}

Element Element::constant(SpecPtr spec, const FieldElem& c) {
    if (c.field() != spec->field()) throw domain_error("constant from a different field");
    PBWMono mono;
    mono.m.assign(spec->n(), 0);
    return monomial(std::move(spec), std::move(mono), c);
}

void Element::add_term(const PBWMono& mono, const FieldElem& coeff) {
    if (!spec_) throw domain_error("element has no algebra");
    if (coeff.field() != spec_->field()) throw domain_error("coefficient from a different field");
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElem Element::coeff_of(const PBWMono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? spec_->field().zero() : it->second;
}

bool same_spec(const SpecPtr& a, const SpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_spec(const Element& a, const Element& b) {
    if (!same_spec(a.spec(), b.spec())) throw domain_error("elements from different algebras");
}

Element Element::operator-() const {
    Element r(spec_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Element Element::operator+(const Element& o) const {
    require_same_spec(*this, o);
    Element r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    require_same_spec(*this, o);
    Element r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
    return r;
}

Element Element::operator*(const Element& o) const {
    require_same_spec(*this, o);
    CoreReducer red(spec_, /*use_blocks=*/true, Strategy::Leftmost);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Letters w;
            w.reserve(ma.i + 2 * ma.j + ma.k + mb.i + 2 * mb.j + mb.k);
            auto append = [&w](const PBWMono& m) {
                w.insert(w.end(), m.i, 0);
                for (std::uint32_t y = 0; y < m.j; ++y) {
                    w.push_back(1);
                    w.push_back(0);
                }
                w.insert(w.end(), m.k, 1);
            };
            append(ma);
            append(mb);
            ExpVec t = ma.m;
            for (std::size_t idx = 0; idx < t.size(); ++idx) t[idx] += mb.m[idx];
            red.push(std::move(w), std::move(t), ca * cb);
        }
    }
    return red.run();
}

Element Element::scale(const FieldElem& c) const {
    Element r(spec_);
    if (c.is_zero()) return r;
    for (const auto& [mono, x] : terms_) r.add_term(mono, x * c);
    return r;
}

Element Element::pow(unsigned e) const {
    Element acc = Element::one(spec_);
    for (unsigned x = 0; x < e; ++x) acc = acc * *this;
    return acc;
}

bool Element::operator==(const Element& o) const {
    return same_spec(spec_, o.spec_) && terms_ == o.terms_;
}

long Element::weighted_degree() const {
    long best = -1;
    for (const auto& [mono, c] : terms_) best = std::max(best, spec_->wdeg(mono));
    return best;
}

std::optional<FieldElem> Element::constant_value() const {
    if (terms_.empty()) return spec_->field().zero();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [mono, c] = *terms_.begin();
    if (mono.i || mono.j || mono.k || exp_total(mono.m)) return std::nullopt;
    return c;
}

std::vector<std::pair<PBWMono, FieldElem>> Element::sorted_terms() const {
    std::vector<std::pair<PBWMono, FieldElem>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
        long da = spec_->wdeg(a.first), db = spec_->wdeg(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return v;
}

namespace {

std::string mono_str(const PBWMono& mono) {
    std::ostringstream out;
    bool first = true;
    auto piece = [&](const std::string& sym, std::uint32_t e) {
        if (e == 0) return;
        if (!first) out << "*";
        first = false;
        out << sym;
        if (e > 1) out << "^" << e;
    };
    piece("u", mono.i);
    piece("(d*u)", mono.j);
    piece("d", mono.k);
    for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
        piece("t" + std::to_string(idx + 1), mono.m[idx]);
    return out.str();
}

bool coeff_composite(const std::string& s) {
    return s.find(' ') != std::string::npos || s.find('/') != std::string::npos ||
           s.find('+') != std::string::npos;
}

} // namespace

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : sorted_terms()) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && !coeff_composite(cs.substr(1));
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string ms = mono_str(mono);
        if (ms.empty()) {
            out << (coeff_composite(cs) ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
            out << ms;
        } else {
            out << (coeff_composite(cs) ? "(" + cs + ")" : cs) << "*" << ms;
        }
    }
    return out.str();
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element reduce_word(const Word& w, const SpecPtr& spec) {
    auto [core, t] = split_word(w, *spec);
    CoreReducer red(spec, /*use_blocks=*/true, Strategy::Leftmost);
    red.push(std::move(core), std::move(t), w.coeff);
    return red.run();
}

Element reduce_word_basic(const Word& w, const SpecPtr& spec, Strategy strategy) {
    auto [core, t] = split_word(w, *spec);
    CoreReducer red(spec, /*use_blocks=*/false, strategy);
    red.push(std::move(core), std::move(t), w.coeff);
    return red.run();
}

unsigned long filtration_count(const AlgebraSpec& spec, unsigned N) {
    const unsigned long W = spec.weight();
    const unsigned n = spec.n();
    auto tuples_below = [n](unsigned long rem) {
        // Count of n-tuples of naturals with sum <= rem: C(rem + n, n).
        unsigned long acc = 1;
        for (unsigned idx = 1; idx <= n; ++idx) acc = acc * (rem + idx) / idx;
        return acc;
    };
    unsigned long count = 0;
    for (unsigned long j = 0; 2 * W * j <= N; ++j)
        for (unsigned long i = 0; W * i + 2 * W * j <= N; ++i)
            for (unsigned long k = 0; W * (i + k) + 2 * W * j <= N; ++k)
                count += tuples_below(N - W * (i + k) - 2 * W * j);
    return count;
}

// ---------------------------------------------------------------------------
// Confluence of the single overlap d^2 u^2.

namespace {

using FreeLC = std::map<std::pair<Letters, ExpVec>, FieldElem>;

void free_add(FreeLC& lc, Letters w, ExpVec t, const FieldElem& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::move(w), std::move(t));
    auto it = lc.find(key);
    if (it == lc.end()) {
        lc.emplace(std::move(key), c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) lc.erase(it);
}

FreeLC relation_d(const AlgebraSpec& spec) {
    // d^2 u - alpha*dud - beta*ud^2 - phi*d
    FreeLC lc;
    ExpVec z(spec.n(), 0);
    free_add(lc, {1, 1, 0}, z, spec.field().one());
    free_add(lc, {1, 0, 1}, z, -spec.alpha());
    free_add(lc, {0, 1, 1}, z, -spec.beta());
    for (const auto& [mu, c] : spec.phi_terms()) free_add(lc, {1}, mu, -c);
    return lc;
}

FreeLC relation_u(const AlgebraSpec& spec) {
    // d u^2 - alpha*udu - beta*u^2 d - phi*u
    FreeLC lc;
    ExpVec z(spec.n(), 0);
    free_add(lc, {1, 0, 0}, z, spec.field().one());
    free_add(lc, {0, 1, 0}, z, -spec.alpha());
    free_add(lc, {0, 0, 1}, z, -spec.beta());
    for (const auto& [mu, c] : spec.phi_terms()) free_add(lc, {0}, mu, -c);
    return lc;
}

FreeLC mul_letter(const FreeLC& lc, std::uint8_t letter, bool on_right) {
    FreeLC out;
    for (const auto& [key, c] : lc) {
        Letters w = key.first;
        if (on_right)
            w.push_back(letter);
        else
            w.insert(w.begin(), letter);
        free_add(out, std::move(w), key.second, c);
    }
    return out;
}

FreeLC free_sub(FreeLC a, const FreeLC& b) {
    for (const auto& [key, c] : b) free_add(a, key.first, key.second, -c);
    return a;
}

std::string one_step_expansion(const AlgebraSpec& spec, bool ddu_first) {
    std::ostringstream out;
    if (ddu_first)
        out << "d.d.u.u -> (" << spec.alpha().str() << ")*d.u.d.u + (" << spec.beta().str()
            << ")*u.d.d.u + phi*d.u";
    else
        out << "d.d.u.u -> (" << spec.alpha().str() << ")*d.u.d.u + (" << spec.beta().str()
            << ")*d.u.u.d + phi*d.u";
    return out.str();
}

} // namespace

ConfluenceReport confluence_check(const SpecPtr& spec) {
    ConfluenceReport rep;
    Word w{spec->field().one(), {1, 1, 0, 0}};
    rep.via_ddu_first = reduce_word_basic(w, spec, Strategy::Leftmost);
    rep.via_duu_first = reduce_word_basic(w, spec, Strategy::Rightmost);
    rep.confluent = rep.via_ddu_first == rep.via_duu_first;
    rep.ddu_first_step = one_step_expansion(*spec, true);
    rep.duu_first_step = one_step_expansion(*spec, false);

    // Overlap identity in the free algebra (t letters kept central):
    // (d^2u - alpha dud - beta ud^2 - phi d) u - d (du^2 - alpha udu - beta u^2d - phi u)
    FreeLC lhs = free_sub(mul_letter(relation_d(*spec), 0, true), mul_letter(relation_u(*spec), 1, false));
    ExpVec z(spec->n(), 0);
    FreeLC rhs_pos, rhs_neg;
    free_add(rhs_pos, {0, 1, 1, 0}, z, spec->beta());  // beta * u d d u
    free_add(rhs_pos, {1, 0, 0, 1}, z, -spec->beta()); // - beta * d u u d
    free_add(rhs_neg, {0, 1, 1, 0}, z, -spec->beta());
    free_add(rhs_neg, {1, 0, 0, 1}, z, spec->beta());
    if (lhs.empty() && spec->beta().is_zero()) {
        rep.identity_ok = true;
        rep.identity_sign = 0;
        rep.note = "overlap difference vanishes identically (beta = 0)";
    } else if (lhs == rhs_pos) {
        rep.identity_ok = true;
        rep.identity_sign = 1;
        rep.note = "overlap difference equals beta*(ud^2u - du^2d)";
    } else if (lhs == rhs_neg) {
        rep.identity_ok = true;
        rep.identity_sign = -1;
        rep.note = "overlap difference equals beta*(du^2d - ud^2u)";
    } else {
        rep.identity_ok = false;
        rep.note = "overlap difference matches neither orientation";
    }
    return rep;
}

Word word_from_letters(const SpecPtr& spec, std::vector<int> letters) {
    for (int letter : letters)
        if (letter < 0 || letter >= static_cast<int>(2 + spec->n()))
            throw domain_error("letter outside the algebra's alphabet");
    return Word{spec->field().one(), std::move(letters)};
}

std::vector<int> letters_of(const PBWMono& mono) {
    std::vector<int> letters;
    letters.insert(letters.end(), mono.i, 0);
    for (std::uint32_t y = 0; y < mono.j; ++y) {
        letters.push_back(1);
        letters.push_back(0);
    }
    letters.insert(letters.end(), mono.k, 1);
    for (std::size_t idx = 0; idx < mono.m.size(); ++idx)
        letters.insert(letters.end(), mono.m[idx], static_cast<int>(2 + idx));
    return letters;
}

} // namespace dua
