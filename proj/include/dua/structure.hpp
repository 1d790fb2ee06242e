#pragma once

#include "dua/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dua {

// Scalars witnessing N*u = c_u * (u*N) and N*d = c_d * (d*N).
struct TwistCertificate {
    FieldElem c_u, c_d;
};

struct CentralityResult {
    bool central = false;
    std::string against;    // generator whose commutator is the witness
    Element witness;        // the nonzero commutator, when not central
};

struct CenterDescription {
    int case_id = 0; // 1..9
    std::vector<std::string> generator_names;
    std::vector<Element> generators;
    std::vector<bool> central_ok; // machine verdict per generator, never assumed
    std::string note;

    bool all_central() const {
        for (bool b : central_ok)
            if (!b) return false;
        return true;
    }
};

struct NormalFamily {
    TwistCertificate twist;
    std::vector<Element> basis;
};

struct GrowthReport {
    std::vector<unsigned long> counts; // filtration_count for N = 0..maxN
    unsigned lag = 0;                  // 2 * weight; the counts are quasi-polynomial with this period
    std::vector<long long> top_diffs;  // (n+3)-th lagged differences
    std::vector<long long> next_diffs; // (n+4)-th lagged differences
    bool conclusive = false;
    bool top_positive = false;
    bool top_constant = false;
    bool next_vanishes = false;
    unsigned inferred_dimension = 0;
    std::string note;

    bool ok() const { return conclusive && top_positive && next_vanishes; }
};

// H = du - r*ud + phi/(s-1), K = du - s*ud + phi/(r-1).
std::pair<Element, Element> make_HK(const SpecPtr& spec);
Element make_H(const SpecPtr& spec);
Element make_K(const SpecPtr& spec);

CentralityResult is_central(const Element& a);

CenterDescription center_generators(const SpecPtr& spec);

std::optional<TwistCertificate> twist_normal_check(const Element& N);

std::vector<NormalFamily> normal_search(const SpecPtr& spec, unsigned maxdeg);

// (d, du - alpha*ud - phi); requires beta = 0. The product is zero.
std::pair<Element, Element> zero_divisor_witness(const SpecPtr& spec);

GrowthReport gk_probe(const SpecPtr& spec, unsigned maxN);

// All basis monomials of weighted degree <= maxdeg, canonical order.
std::vector<PBWMono> monomials_up_to(const AlgebraSpec& spec, long maxdeg);

// Basis of the space of central elements of weighted degree <= maxdeg,
// computed by solving [x, u] = [x, d] = 0 blockwise over the u/d grading.
std::vector<Element> central_space(const SpecPtr& spec, long maxdeg);

// Degree-truncated membership comparison between the solved central space and
// the subalgebra generated by the emitted generators.
struct CenterProbe {
    bool equal = false;
    std::size_t central_dim = 0;
    std::size_t generated_dim = 0;
    std::string detail;
};
CenterProbe center_completeness_probe(const SpecPtr& spec, const CenterDescription& desc,
                                      long maxdeg);

} // namespace dua
