#pragma once

#include "dua/field.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace dua {

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

// Exponents of the basis monomial u^i (du)^j d^k t1^m1 ... tn^mn.
struct PBWMono {
    std::uint32_t i = 0, j = 0, k = 0;
    ExpVec m;

    auto operator<=>(const PBWMono&) const = default;
};

// Letters of a free word: 0 = u, 1 = d, 2 + i = t_{i+1}.
struct Word {
    FieldElem coeff;
    std::vector<int> letters;
};

enum class Strategy { Leftmost, Rightmost };

class Element;

// One down-up algebra over K[t1..tn]: parameters, derived weights, and the
// memoised straightening table for d^a u^b normal forms.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
public:
    // Scalar coefficient fields (Q or Q(zeta_m)); phi has arity n.
    static SpecPtr make(unsigned n, Field field, FieldElem alpha, FieldElem beta,
                        std::optional<FieldElem> r, std::optional<FieldElem> s, MultiPoly phi);
    // n = 0 over a rational function field; phi is the constant gamma.
    static SpecPtr make_classical(Field field, FieldElem alpha, FieldElem beta,
                                  std::optional<FieldElem> r, std::optional<FieldElem> s,
                                  FieldElem gamma);

    unsigned n() const { return n_; }
    const Field& field() const { return field_; }
    const FieldElem& alpha() const { return alpha_; }
    const FieldElem& beta() const { return beta_; }
    const std::optional<FieldElem>& r() const { return r_; }
    const std::optional<FieldElem>& s() const { return s_; }
    bool has_roots() const { return r_.has_value() && s_.has_value(); }

    // phi as a polynomial over scalars; only for scalar coefficient fields.
    const MultiPoly& phi_poly() const;
    // phi as t-exponent/coefficient pairs, the rewriting engine's view.
    const std::vector<std::pair<ExpVec, FieldElem>>& phi_terms() const { return phi_terms_; }
    bool phi_is_zero() const { return phi_terms_.empty(); }
    FieldElem gamma() const; // phi as a field constant; requires deg phi = 0

    unsigned phi_degree() const { return phi_degree_; }
    unsigned weight() const { return weight_; } // w(u) = w(d) = max(deg phi, 1)
    long wdeg(const PBWMono& mono) const;

    bool operator==(const AlgebraSpec& o) const;

    // Normal form of d^a u^b, memoised up to a capped table size.
    Element straighten(unsigned a, unsigned b) const;

    // Table cap applied to specs constructed afterwards (default 10000).
    // Results never depend on the cache, only speed does.
    static void set_default_straighten_cap(std::size_t cap);

    std::string str() const;

private:
    AlgebraSpec() = default;

    unsigned n_ = 0;
    Field field_;
    FieldElem alpha_, beta_;
    std::optional<FieldElem> r_, s_;
    MultiPoly phi_{0};
    std::vector<std::pair<ExpVec, FieldElem>> phi_terms_;
    unsigned phi_degree_ = 0;
    unsigned weight_ = 1;

    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Element>> memo_;
    std::size_t memo_cap_;
};

// A finite K-linear combination of basis monomials, always in normal form.
class Element {
public:
    Element() = default; // detached; unusable until assigned
    explicit Element(SpecPtr spec) : spec_(std::move(spec)) {}

    static Element zero(SpecPtr spec) { return Element(std::move(spec)); }
    static Element one(SpecPtr spec);
    static Element monomial(SpecPtr spec, PBWMono mono, FieldElem coeff);
    static Element gen_u(SpecPtr spec);
    static Element gen_d(SpecPtr spec);
    static Element gen_du(SpecPtr spec);
    static Element gen_t(SpecPtr spec, unsigned idx);
    static Element constant(SpecPtr spec, const FieldElem& c);

    const SpecPtr& spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<PBWMono, FieldElem>& terms() const { return terms_; }

    void add_term(const PBWMono& mono, const FieldElem& coeff);
    FieldElem coeff_of(const PBWMono& mono) const;

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element scale(const FieldElem& c) const;
    Element pow(unsigned e) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    long weighted_degree() const; // -1 for the zero element

    // If the element is c * 1, that coefficient.
    std::optional<FieldElem> constant_value() const;

    // Terms in the canonical order (weighted degree, i, j, k, m).
    std::vector<std::pair<PBWMono, FieldElem>> sorted_terms() const;

    std::string str() const;

private:
    SpecPtr spec_;
    std::map<PBWMono, FieldElem> terms_;
};

bool same_spec(const SpecPtr& a, const SpecPtr& b);
void require_same_spec(const Element& a, const Element& b);

Element commutator(const Element& a, const Element& b);

// Normal form of a free word; consults the straightening table.
Element reduce_word(const Word& w, const SpecPtr& spec);
// Single-rule rewriting, no memo; the oracle the table is checked against.
Element reduce_word_basic(const Word& w, const SpecPtr& spec, Strategy strategy);

// Number of basis monomials of weighted degree <= N.
unsigned long filtration_count(const AlgebraSpec& spec, unsigned N);

struct ConfluenceReport {
    bool confluent = false;
    Element via_ddu_first, via_duu_first;
    std::string ddu_first_step, duu_first_step;
    // The free-algebra overlap identity (rel_d)u - d(rel_u) = sign * beta * (ud^2u - du^2d),
    // checked with t letters already commuted to the side. sign 0 means both sides vanish.
    bool identity_ok = false;
    int identity_sign = 0;
    std::string note;
};

ConfluenceReport confluence_check(const SpecPtr& spec);

// Word helpers.
Word word_from_letters(const SpecPtr& spec, std::vector<int> letters);
std::vector<int> letters_of(const PBWMono& mono);

} // namespace dua
