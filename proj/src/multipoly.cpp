#include "dua/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace dua {

bool deglex_less(const ExpVec& a, const ExpVec& b) {
    std::uint32_t ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

MultiPoly MultiPoly::constant(unsigned arity, const Scalar& c) {
    MultiPoly p(arity);
    p.add_term(ExpVec(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned arity, unsigned idx) {
    if (idx >= arity) throw domain_error("variable index out of range");
    MultiPoly p(arity);
    ExpVec e(arity, 0);
    e[idx] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw domain_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
    return d;
}

unsigned MultiPoly::degree_in(unsigned idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (e.size() != arity_) throw domain_error("exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw domain_error("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw domain_error("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw domain_error("polynomial arity mismatch");
    MultiPoly r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(arity_);
            for (unsigned i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scale(const Scalar& c) const {
    MultiPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(arity_, Scalar(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != arity_) throw domain_error("evaluation point arity mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (unsigned i = 0; i < arity_; ++i)
            if (e[i] > 0) term = term * point[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_affine(const Scalar& a, const Scalar& b) const {
    if (arity_ != 1) throw domain_error("affine substitution requires a univariate polynomial");
    // Horner on a*x + b.
    unsigned d = degree_in(0);
    std::vector<Scalar> coeff(d + 1, Scalar(0));
    for (const auto& [e, c] : terms_) coeff[e[0]] = c;
    MultiPoly arg(1);
    arg.add_term({1}, a);
    arg.add_term({0}, b);
    MultiPoly acc(1);
    for (unsigned k = d + 1; k-- > 0;) {
        acc = acc * arg;
        acc.add_term({0}, coeff[k]);
    }
    return acc;
}

std::pair<ExpVec, Scalar> MultiPoly::leading() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (deglex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Scalar>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return deglex_less(b->first, a->first); });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool composite = cs.find(' ') != std::string::npos;
        bool has_vars = exp_total(e) > 0;
        if (!has_vars) {
            out << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        bool wrote_coeff = false;
        if (composite) {
            out << "(" << cs << ")";
            wrote_coeff = true;
        } else if (cs != "1") {
            out << cs;
            wrote_coeff = true;
        }
        bool first_var = !wrote_coeff;
        for (unsigned i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

std::string MultiPoly::str() const {
    std::vector<std::string> names;
    for (unsigned i = 0; i < arity_; ++i) names.push_back("t" + std::to_string(i + 1));
    return str(names);
}

namespace {

bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Univariate view in the last variable, coefficients of one lower arity.
std::vector<MultiPoly> split_last(const MultiPoly& p) {
    unsigned n = p.arity();
    std::vector<MultiPoly> coeffs(p.degree_in(n - 1) + 1, MultiPoly(n - 1));
    for (const auto& [e, c] : p.terms()) {
        ExpVec inner(e.begin(), e.end() - 1);
        coeffs[e[n - 1]].add_term(inner, c);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

MultiPoly join_last(unsigned arity, const std::vector<MultiPoly>& coeffs) {
    MultiPoly p(arity);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            ExpVec full(e);
            full.push_back(static_cast<std::uint32_t>(k));
            p.add_term(full, c);
        }
    }
    return p;
}

int updeg(const std::vector<MultiPoly>& u) {
    int d = static_cast<int>(u.size()) - 1;
    while (d >= 0 && u[d].is_zero()) --d;
    return d;
}

// Pseudo-remainder of univariate polynomials with polynomial coefficients.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
    int db = updeg(b);
    const MultiPoly& lb = b[db];
    int da = updeg(a);
    while (da >= db) {
        MultiPoly la = a[da];
        for (int i = 0; i <= da; ++i)
            if (!a[i].is_zero()) a[i] = a[i] * lb;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            MultiPoly sub = la * b[i];
            a[i + shift] = a[i + shift] - sub;
        }
        da = updeg(a);
    }
    a.resize(std::max(da + 1, 1), MultiPoly(lb.arity()));
    return a;
}

MultiPoly normalize_lc(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scale(p.leading().second.inverse());
}

MultiPoly drop_last(const MultiPoly& p) {
    MultiPoly q(p.arity() - 1);
    for (const auto& [e, c] : p.terms()) q.add_term(ExpVec(e.begin(), e.end() - 1), c);
    return q;
}

MultiPoly lift_last(const MultiPoly& p) {
    MultiPoly q(p.arity() + 1);
    for (const auto& [e, c] : p.terms()) {
        ExpVec full(e);
        full.push_back(0);
        q.add_term(full, c);
    }
    return q;
}

MultiPoly content(const MultiPoly& p); // forward

// Primitive PRS in the last variable, recursing on arity for contents.
MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_lc(b);
    if (b.is_zero()) return normalize_lc(a);
    unsigned n = a.arity();
    if (n == 0 || a.is_constant() || b.is_constant()) return MultiPoly::constant(n, Scalar(1));
    if (a.degree_in(n - 1) == 0 && b.degree_in(n - 1) == 0)
        return lift_last(gcd_impl(drop_last(a), drop_last(b)));
    MultiPoly ca = content(a), cb = content(b);
    MultiPoly pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
    auto u = split_last(pa), v = split_last(pb);
    if (updeg(u) < updeg(v)) std::swap(u, v);
    MultiPoly gpp(n);
    while (true) {
        int dv = updeg(v);
        if (dv < 0) {
            MultiPoly ju = join_last(n, u);
            gpp = poly_divexact(ju, content(ju));
            break;
        }
        if (dv == 0) {
            // Primitive parts are coprime in the main variable.
            gpp = MultiPoly::constant(n, Scalar(1));
            break;
        }
        auto r = pseudo_rem(u, v);
        MultiPoly rp = join_last(n, r);
        if (!rp.is_zero()) rp = poly_divexact(rp, content(rp));
        u = std::move(v);
        if (rp.is_zero())
            v = {MultiPoly(n - 1)};
        else
            v = split_last(rp);
    }
    return normalize_lc(gpp * gcd_impl(ca, cb));
}

// Gcd of the coefficients of p viewed in its last variable, lifted back to
// full arity with the last exponent zero.
MultiPoly content(const MultiPoly& p) {
    auto coeffs = split_last(p);
    MultiPoly g(p.arity() - 1);
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return lift_last(g);
}

} // namespace

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.arity() != b.arity()) throw domain_error("polynomial arity mismatch");
    MultiPoly rem = a;
    MultiPoly quo(a.arity());
    auto [lbe, lbc] = b.leading();
    while (!rem.is_zero()) {
        auto [le, lc] = rem.leading();
        if (!exp_divides(lbe, le)) throw domain_error("inexact polynomial division");
        ExpVec qe(le.size());
        for (std::size_t i = 0; i < le.size(); ++i) qe[i] = le[i] - lbe[i];
        Scalar qc = lc / lbc;
        MultiPoly qt(a.arity());
        qt.add_term(qe, qc);
        quo = quo + qt;
        rem = rem - qt * b;
    }
    return quo;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

} // namespace dua
