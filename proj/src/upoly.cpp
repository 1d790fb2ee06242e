#include "dua/upoly.hpp"

namespace dua::upoly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Rat& c, const Poly& a) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    Poly rem = a;
    Poly quo;
    if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (rem.size() >= b.size()) {
        Rat c = rem.back() / lead;
        std::size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        trim(rem);
        if (rem.empty()) break;
        if (rem.size() < b.size()) break;
    }
    trim(quo);
    return {quo, rem};
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw domain_error("inexact polynomial division");
    return q;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    // Standard extended Euclid, normalised monic at the end.
    Poly r0 = a, r1 = b;
    Poly u0 = {Rat(1)}, u1 = {};
    Poly v0 = {}, v1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (r0.empty()) return {r0, u0, v0};
    Rat inv = Rat(1) / r0.back();
    return {scale(inv, r0), scale(inv, u0), scale(inv, v0)};
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned x = m;
    for (unsigned p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            result -= result / p;
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

Poly cyclotomic(unsigned m) {
    if (m == 0) throw domain_error("cyclotomic order must be positive");
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    Poly num(m + 1, Rat(0));
    num[0] = Rat(-1);
    num[m] = Rat(1);
    Poly den = {Rat(1)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) den = mul(den, cyclotomic(d));
    return divexact(num, den);
}

} // namespace dua::upoly
