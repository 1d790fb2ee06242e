#include "dua/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dua {

namespace {

std::vector<Rat> reduce_mod(unsigned m, upoly::Poly p, const upoly::Poly& phi) {
    upoly::trim(p);
    if (upoly::degree(p) >= upoly::degree(phi)) p = upoly::divmod(p, phi).second;
    p.resize(phi.size() - 1, Rat(0));
    (void)m;
    return p;
}

} // namespace

const upoly::Poly& Scalar::min_poly(unsigned m) {
    static std::map<unsigned, upoly::Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, upoly::cyclotomic(m)).first;
    return it->second;
}

Scalar Scalar::zeta(unsigned m) {
    if (m == 0) throw domain_error("cyclotomic order must be positive");
    upoly::Poly x = {Rat(0), Rat(1)};
    return from_coeffs(m, std::move(x));
}

Scalar Scalar::from_coeffs(unsigned m, upoly::Poly coeffs) {
    if (m == 0) throw domain_error("cyclotomic order must be positive");
    return Scalar(m, reduce_mod(m, std::move(coeffs), min_poly(m)));
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) throw domain_error("scalar is not rational: " + str());
    return c_[0];
}

std::pair<Scalar, Scalar> Scalar::promoted(const Scalar& a, const Scalar& b) {
    if (a.m_ == b.m_) return {a, b};
    if (a.m_ == 1 && a.is_rational()) return {Scalar(b.m_, reduce_mod(b.m_, {a.c_[0]}, min_poly(b.m_))), b};
    if (b.m_ == 1 && b.is_rational()) return {a, Scalar(a.m_, reduce_mod(a.m_, {b.c_[0]}, min_poly(a.m_)))};
    throw domain_error("scalars from different cyclotomic fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    upoly::Poly pa(a.c_.begin(), a.c_.end());
    upoly::Poly pb(b.c_.begin(), b.c_.end());
    return Scalar(a.m_, reduce_mod(a.m_, upoly::mul(pa, pb), min_poly(a.m_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    if (is_rational()) {
        Scalar r = *this;
        r.c_[0] = Rat(1) / r.c_[0];
        for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = Rat(0);
        return r;
    }
    upoly::Poly p(c_.begin(), c_.end());
    upoly::trim(p);
    auto eg = upoly::ext_gcd(p, min_poly(m_));
    if (upoly::degree(eg.g) != 0) throw domain_error("non-invertible cyclotomic value");
    return Scalar(m_, reduce_mod(m_, eg.u, min_poly(m_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e == 0) {
        std::vector<Rat> one(c_.size(), Rat(0));
        one[0] = Rat(1);
        return Scalar(m_, std::move(one));
    }
    Scalar base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Scalar acc(Rat(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    return a.c_ == b.c_;
}

std::optional<unsigned> Scalar::root_of_unity_order() const {
    if (is_zero()) throw domain_error("root-of-unity order of zero");
    unsigned bound = std::lcm(2u, m_);
    for (unsigned d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        if (pow(static_cast<long>(d)).is_one()) return d;
    }
    return std::nullopt;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& x = c_[i];
        if (x == 0) continue;
        Rat ax = x < 0 ? Rat(-x) : x;
        if (first) {
            if (x < 0) out << "-";
            first = false;
        } else {
            out << (x < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << ax.get_str();
        } else {
            if (ax != 1) out << ax.get_str() << "*";
            out << "zeta";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace dua
