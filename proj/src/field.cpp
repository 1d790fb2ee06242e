#include "dua/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dua {

namespace {

std::shared_ptr<const FieldDescriptor> make_desc(FieldDescriptor::Kind kind, unsigned m, unsigned arity) {
    static std::map<std::tuple<int, unsigned, unsigned>, std::shared_ptr<const FieldDescriptor>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), m, arity);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = kind;
    d->cyclo_order = m;
    d->arity = arity;
    d->min_poly = upoly::cyclotomic(m);
    cache.emplace(key, d);
    return d;
}

} // namespace

Field Field::rational() { return Field(make_desc(FieldDescriptor::Kind::Rational, 1, 0)); }

Field Field::cyclotomic(unsigned m) {
    if (m == 0) throw domain_error("cyclotomic order must be positive");
    return Field(make_desc(FieldDescriptor::Kind::Cyclotomic, m, 0));
}

Field Field::rational_function(unsigned arity, unsigned scalar_order) {
    if (arity == 0) throw domain_error("rational function field needs at least one variable");
    if (scalar_order == 0) throw domain_error("cyclotomic order must be positive");
    return Field(make_desc(FieldDescriptor::Kind::RationalFunction, scalar_order, arity));
}

FieldElem Field::zero() const { return elem(Scalar(0)); }
FieldElem Field::one() const { return elem(Scalar(1)); }
FieldElem Field::elem(long v) const { return elem(Scalar(v)); }
FieldElem Field::elem(const Rat& v) const { return elem(Scalar(v)); }

FieldElem Field::elem(const Scalar& s) const {
    if (s.order() != 1 && s.order() != cyclo_order() && !s.is_rational())
        throw domain_error("scalar does not belong to this field");
    Scalar promoted = s;
    if (cyclo_order() > 1 && s.order() == 1)
        promoted = Scalar::from_coeffs(cyclo_order(), {s.rational_value()});
    if (is_scalar_kind()) return FieldElem(*this, promoted);
    return FieldElem(*this, MultiPoly::constant(arity(), promoted),
                     MultiPoly::constant(arity(), Scalar(1)));
}

FieldElem Field::zeta() const {
    if (cyclo_order() < 2) throw domain_error("field has no primitive root of unity beyond -1");
    return elem(Scalar::zeta(cyclo_order()));
}

FieldElem Field::t_var(unsigned idx) const {
    if (is_scalar_kind()) throw domain_error("t variables live in rational function fields only");
    if (idx >= arity()) throw domain_error("t variable index out of range");
    return FieldElem(*this, MultiPoly::variable(arity(), idx),
                     MultiPoly::constant(arity(), Scalar(1)));
}

FieldElem Field::ratio(const MultiPoly& num, const MultiPoly& den) const {
    if (is_scalar_kind()) throw domain_error("field is not a rational function field");
    return FieldElem(*this, num, den);
}

std::string Field::str() const {
    std::ostringstream out;
    switch (kind()) {
    case FieldDescriptor::Kind::Rational: return "Q";
    case FieldDescriptor::Kind::Cyclotomic:
        out << "Q(zeta_" << cyclo_order() << ")";
        return out.str();
    case FieldDescriptor::Kind::RationalFunction:
        if (cyclo_order() > 1)
            out << "Q(zeta_" << cyclo_order() << ")";
        else
            out << "Q";
        out << "(t1..t" << arity() << ")";
        return out.str();
    }
    return "?";
}

FieldElem::FieldElem(Field f, Scalar s) : field_(std::move(f)), s_(std::move(s)), num_(0), den_(0) {
    if (!field_.is_scalar_kind()) {
        num_ = MultiPoly::constant(field_.arity(), s_);
        den_ = MultiPoly::constant(field_.arity(), Scalar(1));
        s_ = Scalar(0);
    }
}

FieldElem::FieldElem(Field f, MultiPoly num, MultiPoly den)
    : field_(std::move(f)), s_(0), num_(std::move(num)), den_(std::move(den)) {
    if (field_.is_scalar_kind()) throw domain_error("field is not a rational function field");
    if (den_.is_zero()) throw domain_error("division by zero");
    reduce();
}

void FieldElem::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(field_.arity(), Scalar(1));
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    Scalar lc = den_.leading().second;
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

bool FieldElem::is_zero() const {
    return field_.is_scalar_kind() ? s_.is_zero() : num_.is_zero();
}

bool FieldElem::is_one() const {
    if (field_.is_scalar_kind()) return s_.is_one();
    return den_.is_constant() && num_ == den_;
}

std::optional<Scalar> FieldElem::scalar_value() const {
    if (field_.is_scalar_kind()) return s_;
    if (num_.is_constant() && den_.is_constant())
        return num_.constant_value() / den_.constant_value();
    return std::nullopt;
}

bool FieldElem::is_rational() const {
    auto s = scalar_value();
    return s && s->is_rational();
}

Rat FieldElem::rational_value() const {
    auto s = scalar_value();
    if (!s || !s->is_rational()) throw domain_error("value is not rational: " + str());
    return s->rational_value();
}

void FieldElem::check_same(const FieldElem& o) const {
    if (field_ != o.field_) throw domain_error("field elements from different fields");
}

FieldElem FieldElem::operator-() const {
    if (field_.is_scalar_kind()) return FieldElem(field_, -s_);
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    if (field_.is_scalar_kind()) return FieldElem(field_, s_ + o.s_);
    return FieldElem(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    if (field_.is_scalar_kind()) return FieldElem(field_, s_ - o.s_);
    return FieldElem(field_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    if (field_.is_scalar_kind()) return FieldElem(field_, s_ * o.s_);
    return FieldElem(field_, num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    if (field_.is_scalar_kind()) return FieldElem(field_, s_.inverse());
    return FieldElem(field_, den_, num_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e == 0) return field_.one();
    FieldElem base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    FieldElem acc = field_.one();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_scalar_kind()) return s_ == o.s_;
    return num_ == o.num_ && den_ == o.den_;
}

std::string FieldElem::str() const {
    if (field_.is_scalar_kind()) return s_.str();
    auto wrap = [](const MultiPoly& p) {
        std::string s = p.str();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (den_.is_constant()) return num_.str();
    return wrap(num_) + " / " + wrap(den_);
}

std::optional<unsigned> root_of_unity_order(const FieldElem& x) {
    if (x.is_zero()) throw domain_error("root-of-unity order of zero");
    auto s = x.scalar_value();
    if (!s)
        throw unsupported_error("root-of-unity order undefined for non-constant rational functions");
    return s->root_of_unity_order();
}

namespace {

// Signed prime factorisation num/den -> prime -> exponent (den exponents
// negative). Trial division with a probable-prime fallback.
std::map<Int, long> factor_rat(const Rat& q, int& sign) {
    sign = sgn(q) < 0 ? -1 : 1;
    std::map<Int, long> out;
    auto run = [&](Int v, long mult) {
        if (v < 0) v = -v;
        for (Int p = 2; p * p <= v && p < 1000000; ++p) {
            while (v % p == 0) {
                out[p] += mult;
                v /= p;
            }
        }
        if (v > 1) {
            if (mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
                throw unsupported_error("cannot factor parameter for multiplicative dependence");
            out[v] += mult;
        }
    };
    run(q.get_num(), 1);
    run(q.get_den(), -1);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Ordering on candidate relations: minimal |i|+|j|, then i >= 0, then smaller j.
bool rel_better(const MultRelation& a, const MultRelation& b) {
    long sa = std::abs(a.i) + std::abs(a.j);
    long sb = std::abs(b.i) + std::abs(b.j);
    if (sa != sb) return sa < sb;
    bool na = a.i < 0, nb = b.i < 0;
    if (na != nb) return !na;
    return a.j < b.j;
}

MultRelation pick(std::vector<MultRelation> cands) {
    return *std::min_element(cands.begin(), cands.end(), rel_better);
}

} // namespace

std::optional<MultRelation> mult_dependence(const FieldElem& r, const FieldElem& s) {
    if (r.is_zero() || s.is_zero()) throw domain_error("multiplicative dependence of zero");
    auto rs = r.scalar_value(), ss = s.scalar_value();
    if (!rs || !ss)
        throw unsupported_error("multiplicative dependence supports scalar parameters only");
    auto check = [&](const MultRelation& rel) {
        if (!(rs->pow(rel.i) * ss->pow(rel.j)).is_one())
            throw error("internal: invalid multiplicative relation");
        return rel;
    };

    auto tor_r = rs->root_of_unity_order();
    auto tor_s = ss->root_of_unity_order();
    if (tor_r && tor_s) {
        long p = *tor_r, q = *tor_s;
        std::vector<MultRelation> cands;
        for (long i = -p; i <= p; ++i)
            for (long j = -q; j <= q; ++j) {
                if (i == 0 && j == 0) continue;
                if ((rs->pow(i) * ss->pow(j)).is_one()) cands.push_back({i, j});
            }
        return check(pick(std::move(cands)));
    }
    if (tor_r && !tor_s) {
        if (!ss->is_rational())
            throw unsupported_error("multiplicative dependence outside rationals and roots of unity");
        return check({static_cast<long>(*tor_r), 0});
    }
    if (!tor_r && tor_s) {
        if (!rs->is_rational())
            throw unsupported_error("multiplicative dependence outside rationals and roots of unity");
        return check({0, static_cast<long>(*tor_s)});
    }
    if (!rs->is_rational() || !ss->is_rational())
        throw unsupported_error("multiplicative dependence outside rationals and roots of unity");

    int sign_r, sign_s;
    auto fr = factor_rat(rs->rational_value(), sign_r);
    auto fs = factor_rat(ss->rational_value(), sign_s);
    std::vector<Int> primes;
    for (const auto& [p, e] : fr) primes.push_back(p);
    for (const auto& [p, e] : fs)
        if (!fr.count(p)) primes.push_back(p);
    std::vector<long> a, b;
    for (const auto& p : primes) {
        a.push_back(fr.count(p) ? fr[p] : 0);
        b.push_back(fs.count(p) ? fs[p] : 0);
    }
    // Parallel test: nontrivial kernel of (i,j) -> i*a + j*b requires a || b.
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y)
            if (static_cast<long long>(a[x]) * b[y] != static_cast<long long>(a[y]) * b[x])
                return std::nullopt;
    long g = 0;
    for (long v : a) g = std::gcd(g, std::abs(v));
    std::vector<long> dir;
    for (long v : a) dir.push_back(v / g);
    // Fix the direction's sign by its first nonzero entry.
    for (long v : dir) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : dir) w = -w;
        break;
    }
    long ca = 0, cb = 0;
    for (std::size_t x = 0; x < dir.size(); ++x)
        if (dir[x] != 0) {
            ca = a[x] / dir[x];
            cb = b[x] / dir[x];
            break;
        }
    long d = std::gcd(std::abs(ca), std::abs(cb));
    long i0 = cb / d, j0 = -ca / d;
    int sig = 1;
    if (sign_r < 0 && (i0 & 1)) sig = -sig;
    if (sign_s < 0 && (j0 & 1)) sig = -sig;
    if (sig < 0) {
        i0 *= 2;
        j0 *= 2;
    }
    return check(pick({{i0, j0}, {-i0, -j0}}));
}

MultiPoly poly_substitute_affine(const MultiPoly& p, const FieldElem& a, const FieldElem& b) {
    if (p.arity() != 1) throw domain_error("affine substitution requires a univariate polynomial");
    auto sa = a.scalar_value(), sb = b.scalar_value();
    if (!sa || !sb) throw domain_error("affine substitution needs scalar coefficients");
    if (sa->is_zero()) throw domain_error("affine substitution needs a nonzero leading scale");
    return p.substitute_affine(*sa, *sb);
}

} // namespace dua
