#include "dua/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dua {

namespace {

Element phi_element(const SpecPtr& spec, const FieldElem& scale) {
    Element e(spec);
    for (const auto& [mu, c] : spec->phi_terms()) {
        PBWMono mono;
        mono.m = mu;
        if (mono.m.size() != spec->n()) mono.m.assign(spec->n(), 0);
        e.add_term(mono, c * scale);
    }
    return e;
}

Element hk_element(const SpecPtr& spec, const FieldElem& root, const FieldElem& other_root,
                   const char* name) {
    if (!spec->has_roots()) throw domain_error(std::string(name) + " needs roots r, s");
    Element du = Element::gen_du(spec);
    PBWMono ud_mono;
    ud_mono.i = 1;
    ud_mono.k = 1;
    ud_mono.m.assign(spec->n(), 0);
    Element ud = Element::monomial(spec, ud_mono, spec->field().one());
    Element e = du - ud.scale(root);
    if (!spec->phi_is_zero()) {
        FieldElem denom = other_root - spec->field().one();
        if (denom.is_zero())
            throw domain_error(std::string(name) +
                               " undefined: phi != 0 with a unit root (the r = 1 or s = 1 regime)");
        e = e + phi_element(spec, denom.inverse());
    }
    return e;
}

} // namespace

Element make_H(const SpecPtr& spec) { return hk_element(spec, *spec->r(), *spec->s(), "H"); }
Element make_K(const SpecPtr& spec) { return hk_element(spec, *spec->s(), *spec->r(), "K"); }

std::pair<Element, Element> make_HK(const SpecPtr& spec) {
    if (!spec->has_roots()) throw domain_error("H, K need roots r, s");
    return {make_H(spec), make_K(spec)};
}

CentralityResult is_central(const Element& a) {
    const SpecPtr& spec = a.spec();
    CentralityResult res;
    auto check = [&](const Element& g, const char* name) {
        Element c = commutator(a, g);
        if (c.is_zero()) return true;
        res.central = false;
        res.against = name;
        res.witness = std::move(c);
        return false;
    };
    if (!check(Element::gen_u(spec), "u")) return res;
    if (!check(Element::gen_d(spec), "d")) return res;
    for (unsigned idx = 0; idx < spec->n(); ++idx) {
        std::string name = "t" + std::to_string(idx + 1);
        if (!check(Element::gen_t(spec, idx), name.c_str())) return res;
    }
    res.central = true;
    return res;
}

namespace {

void push_t_generators(const SpecPtr& spec, CenterDescription& desc) {
    for (unsigned idx = 0; idx < spec->n(); ++idx) {
        desc.generator_names.push_back("t" + std::to_string(idx + 1));
        desc.generators.push_back(Element::gen_t(spec, idx));
    }
}

void finish(const SpecPtr& spec, CenterDescription& desc) {
    push_t_generators(spec, desc);
    for (const auto& g : desc.generators) desc.central_ok.push_back(is_central(g).central);
}

// Minimal monoid generators of {(i, j) >= 0, nonzero : s^i r^j = 1}.
std::vector<std::pair<long, long>> hilbert_basis_relations(const FieldElem& r, const FieldElem& s,
                                                           long bound) {
    std::vector<std::pair<long, long>> sols;
    for (long i = 0; i <= bound; ++i)
        for (long j = 0; j <= bound; ++j) {
            if (i == 0 && j == 0) continue;
            if ((s.pow(i) * r.pow(j)).is_one()) sols.emplace_back(i, j);
        }
    std::vector<std::pair<long, long>> basis;
    for (const auto& [i, j] : sols) {
        bool decomposable = false;
        for (const auto& [a, b] : sols) {
            if (a > i || b > j || (a == i && b == j)) continue;
            long ci = i - a, cj = j - b;
            if (ci == 0 && cj == 0) continue;
            if (std::find(sols.begin(), sols.end(), std::make_pair(ci, cj)) != sols.end()) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) basis.emplace_back(i, j);
    }
    return basis;
}

Element hk_power(const SpecPtr& spec, long i_h, long j_k) {
    Element g = Element::one(spec);
    if (i_h > 0) g = g * make_H(spec).pow(static_cast<unsigned>(i_h));
    if (j_k > 0) g = g * make_K(spec).pow(static_cast<unsigned>(j_k));
    return g;
}

std::string hk_name(long i_h, long j_k) {
    std::ostringstream name;
    if (i_h > 0) name << "H" << (i_h > 1 ? "^" + std::to_string(i_h) : "");
    if (i_h > 0 && j_k > 0) name << "*";
    if (j_k > 0) name << "K" << (j_k > 1 ? "^" + std::to_string(j_k) : "");
    return name.str();
}

} // namespace

CenterDescription center_generators(const SpecPtr& spec) {
    if (!spec->has_roots())
        throw domain_error("center description needs roots r, s; supply them in the spec");
    const FieldElem r = *spec->r();
    const FieldElem s = *spec->s();
    const bool phi_zero = spec->phi_is_zero();
    CenterDescription desc;

    auto ord_r = root_of_unity_order(r);
    auto ord_s = root_of_unity_order(s);

    if (r == s) {
        if (ord_r) {
            unsigned m = *ord_r;
            if (m == 1) {
                if (phi_zero) {
                    desc.case_id = 1;
                    desc.note = "r = s = 1 with phi = 0; H = du - ud, exponent m = 1";
                    desc.generator_names.push_back("H");
                    desc.generators.push_back(make_H(spec));
                } else {
                    desc.case_id = 2;
                    desc.note = "alpha = 2, beta = -1: (du - ud)^2 - phi*(du + ud)";
                    Element du = Element::gen_du(spec);
                    PBWMono udm;
                    udm.i = 1;
                    udm.k = 1;
                    udm.m.assign(spec->n(), 0);
                    Element ud = Element::monomial(spec, udm, spec->field().one());
                    Element diff = du - ud;
                    Element g = diff * diff - phi_element(spec, spec->field().one()) * (du + ud);
                    desc.generator_names.push_back("(du-ud)^2 - phi*(du+ud)");
                    desc.generators.push_back(std::move(g));
                }
            } else {
                desc.case_id = 1;
                desc.note = "r = s a primitive root of unity of order " + std::to_string(m) +
                            "; generator H^m (reading the printed du-r*du as du-r*ud)";
                desc.generator_names.push_back("H^" + std::to_string(m));
                desc.generators.push_back(make_H(spec).pow(m));
            }
            finish(spec, desc);
            return desc;
        }
        desc.case_id = 9;
        desc.note = "r = s not a root of unity: center is K[t1..tn]";
        finish(spec, desc);
        return desc;
    }

    if (ord_r && ord_s) {
        unsigned m1 = *ord_r, m2 = *ord_s;
        if (m1 > 1 && m2 > 1) {
            desc.case_id = 6;
        } else if (phi_zero) {
            desc.case_id = 6; // orders 1 admitted when phi = 0
        } else if (m1 == 1) {
            // r = 1, s of order m2 > 1, phi != 0
            desc.case_id = 7;
            desc.note = "r = 1, s of order " + std::to_string(m2) + ", phi != 0: generator H^m";
            desc.generator_names.push_back("H^" + std::to_string(m2));
            desc.generators.push_back(make_H(spec).pow(m2));
            finish(spec, desc);
            return desc;
        } else {
            desc.case_id = 8;
            desc.note = "s = 1, r of order " + std::to_string(m1) + ", phi != 0: generator K^m";
            desc.generator_names.push_back("K^" + std::to_string(m1));
            desc.generators.push_back(make_K(spec).pow(m1));
            finish(spec, desc);
            return desc;
        }
        unsigned m = std::lcm(m1, m2);
        desc.note = "both roots of unity (orders " + std::to_string(m1) + ", " + std::to_string(m2) +
                    "), m = lcm = " + std::to_string(m);
        desc.generator_names.push_back("d^" + std::to_string(m));
        desc.generators.push_back(Element::gen_d(spec).pow(m));
        desc.generator_names.push_back("u^" + std::to_string(m));
        desc.generators.push_back(Element::gen_u(spec).pow(m));
        for (const auto& [i, j] : hilbert_basis_relations(r, s, m)) {
            desc.generator_names.push_back(hk_name(i, j));
            desc.generators.push_back(hk_power(spec, i, j));
        }
        finish(spec, desc);
        return desc;
    }

    if (ord_r && !ord_s) {
        unsigned m = *ord_r;
        if (m > 1 || phi_zero) {
            desc.case_id = 3;
            desc.note = "r of order " + std::to_string(m) + ", s not a root of unity: generator K^m";
            desc.generator_names.push_back(m == 1 ? "K" : "K^" + std::to_string(m));
            desc.generators.push_back(make_K(spec).pow(m));
        } else {
            desc.case_id = 9;
            desc.note = "r = 1 with phi != 0 and s free: center is K[t1..tn]";
        }
        finish(spec, desc);
        return desc;
    }
    if (!ord_r && ord_s) {
        unsigned m = *ord_s;
        if (m > 1 || phi_zero) {
            desc.case_id = 4;
            desc.note = "s of order " + std::to_string(m) + ", r not a root of unity: generator H^m";
            desc.generator_names.push_back(m == 1 ? "H" : "H^" + std::to_string(m));
            desc.generators.push_back(make_H(spec).pow(m));
        } else {
            desc.case_id = 9;
            desc.note = "s = 1 with phi != 0 and r free: center is K[t1..tn]";
        }
        finish(spec, desc);
        return desc;
    }

    // Neither root of unity, r != s: dependence decides between cases 5 and 9.
    auto rel = mult_dependence(r, s);
    if (rel) {
        long i = rel->i, j = rel->j;
        if (i < 0 && j < 0) {
            i = -i;
            j = -j;
        }
        if (i > 0 && j > 0) {
            desc.case_id = 5;
            std::ostringstream note;
            note << "r^" << i << "*s^" << j << " = 1: generator " << hk_name(j, i);
            desc.note = note.str();
            desc.generator_names.push_back(hk_name(j, i));
            desc.generators.push_back(hk_power(spec, j, i));
            finish(spec, desc);
            return desc;
        }
        desc.case_id = 9;
        desc.note = "only mixed-sign relations between r and s: center is K[t1..tn]";
        finish(spec, desc);
        return desc;
    }
    desc.case_id = 9;
    desc.note = "r, s multiplicatively independent: center is K[t1..tn]";
    finish(spec, desc);
    return desc;
}

std::optional<TwistCertificate> twist_normal_check(const Element& N) {
    if (N.is_zero()) throw domain_error("twist check needs a nonzero element");
    const SpecPtr& spec = N.spec();
    auto solve_side = [&](const Element& g) -> std::optional<FieldElem> {
        Element lhs = N * g;
        Element rhs = g * N;
        if (lhs.is_zero() && rhs.is_zero()) return spec->field().one();
        if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
        const auto& [mono, rc] = *rhs.terms().begin();
        FieldElem lc = lhs.coeff_of(mono);
        if (lc.is_zero()) return std::nullopt;
        FieldElem ratio = lc / rc;
        if (lhs == rhs.scale(ratio)) return ratio;
        return std::nullopt;
    };
    auto cu = solve_side(Element::gen_u(spec));
    if (!cu) return std::nullopt;
    auto cd = solve_side(Element::gen_d(spec));
    if (!cd) return std::nullopt;
    return TwistCertificate{*cu, *cd};
}

std::vector<PBWMono> monomials_up_to(const AlgebraSpec& spec, long maxdeg) {
    std::vector<PBWMono> out;
    if (maxdeg < 0) return out;
    const long W = spec.weight();
    const unsigned n = spec.n();
    for (std::uint32_t j = 0; 2 * W * j <= maxdeg; ++j)
        for (std::uint32_t i = 0; W * i + 2 * W * j <= maxdeg; ++i)
            for (std::uint32_t k = 0; W * (i + k) + 2 * W * j <= maxdeg; ++k) {
                long rem = maxdeg - W * (i + k) - 2 * W * j;
                PBWMono mono;
                mono.i = i;
                mono.j = j;
                mono.k = k;
                mono.m.assign(n, 0);
                // Enumerate t exponent vectors with total <= rem.
                std::vector<std::uint32_t> m(n, 0);
                while (true) {
                    mono.m = ExpVec(m.begin(), m.end());
                    out.push_back(mono);
                    if (n == 0) break;
                    std::size_t pos = 0;
                    while (pos < n) {
                        ++m[pos];
                        long total = 0;
                        for (auto v : m) total += v;
                        if (total <= rem) break;
                        m[pos] = 0;
                        ++pos;
                    }
                    if (pos == n) break;
                }
            }
    std::sort(out.begin(), out.end(), [&spec](const PBWMono& a, const PBWMono& b) {
        long da = spec.wdeg(a), db = spec.wdeg(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

namespace {

long grading(const PBWMono& mono) {
    return static_cast<long>(mono.i) - static_cast<long>(mono.k);
}

struct MonoProducts {
    PBWMono mono;
    Element Mu, uM, Md, dM;
};

std::vector<MonoProducts> side_products(const SpecPtr& spec, const std::vector<PBWMono>& monos) {
    Element u = Element::gen_u(spec);
    Element d = Element::gen_d(spec);
    std::vector<MonoProducts> out;
    out.reserve(monos.size());
    for (const auto& mono : monos) {
        Element M = Element::monomial(spec, mono, spec->field().one());
        out.push_back(MonoProducts{mono, M * u, u * M, M * d, d * M});
    }
    return out;
}

// Solves N*u = c_u*(u*N), N*d = c_d*(d*N) on the span of the given monomials,
// blockwise over the u/d grading (both equations preserve it).
std::vector<Element> twisted_space(const SpecPtr& spec, const std::vector<MonoProducts>& prods,
                                   const FieldElem& c_u, const FieldElem& c_d) {
    std::map<long, std::vector<const MonoProducts*>> blocks;
    for (const auto& p : prods) blocks[grading(p.mono)].push_back(&p);
    std::vector<Element> out;
    for (const auto& [g, block] : blocks) {
        std::vector<Element> defects;
        defects.reserve(2 * block.size());
        for (const auto* p : block) {
            defects.push_back(p->Mu - p->uM.scale(c_u));
            defects.push_back(p->Md - p->dM.scale(c_d));
        }
        std::set<PBWMono> support_u, support_d;
        for (std::size_t idx = 0; idx < block.size(); ++idx) {
            for (const auto& [mono, c] : defects[2 * idx].terms()) support_u.insert(mono);
            for (const auto& [mono, c] : defects[2 * idx + 1].terms()) support_d.insert(mono);
        }
        std::vector<PBWMono> rows_u(support_u.begin(), support_u.end());
        std::vector<PBWMono> rows_d(support_d.begin(), support_d.end());
        if (rows_u.empty() && rows_d.empty()) {
            for (const auto* p : block)
                out.push_back(Element::monomial(spec, p->mono, spec->field().one()));
            continue;
        }
        linalg::Mat sys(rows_u.size() + rows_d.size(),
                        linalg::Vec(block.size(), spec->field().zero()));
        for (std::size_t colidx = 0; colidx < block.size(); ++colidx) {
            for (std::size_t ridx = 0; ridx < rows_u.size(); ++ridx)
                sys[ridx][colidx] = defects[2 * colidx].coeff_of(rows_u[ridx]);
            for (std::size_t ridx = 0; ridx < rows_d.size(); ++ridx)
                sys[rows_u.size() + ridx][colidx] = defects[2 * colidx + 1].coeff_of(rows_d[ridx]);
        }
        for (const auto& x : linalg::nullspace(std::move(sys), spec->field())) {
            Element e(spec);
            for (std::size_t colidx = 0; colidx < block.size(); ++colidx)
                e.add_term(block[colidx]->mono, x[colidx]);
            if (!e.is_zero()) out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace

std::vector<Element> central_space(const SpecPtr& spec, long maxdeg) {
    auto prods = side_products(spec, monomials_up_to(*spec, maxdeg));
    return twisted_space(spec, prods, spec->field().one(), spec->field().one());
}

std::vector<NormalFamily> normal_search(const SpecPtr& spec, unsigned maxdeg) {
    if (!spec->has_roots()) throw domain_error("normal element search needs roots r, s");
    const FieldElem r = *spec->r();
    const FieldElem s = *spec->s();
    if (r == spec->field().one() || s == spec->field().one())
        throw domain_error("normal element search needs r != 1 and s != 1");
    auto prods = side_products(spec, monomials_up_to(*spec, maxdeg));
    // Candidate twists c_u = r^a s^b with |a|, |b| <= maxdeg and c_d = c_u^{-1}
    // (every classified family has inverse twists).
    std::vector<FieldElem> candidates;
    long G = static_cast<long>(maxdeg);
    for (long a = -G; a <= G; ++a)
        for (long b = -G; b <= G; ++b) {
            FieldElem c = r.pow(a) * s.pow(b);
            bool seen = false;
            for (const auto& prev : candidates)
                if (prev == c) {
                    seen = true;
                    break;
                }
            if (!seen) candidates.push_back(std::move(c));
        }
    std::vector<NormalFamily> out;
    for (const auto& c : candidates) {
        auto basis = twisted_space(spec, prods, c, c.inverse());
        if (basis.empty()) continue;
        out.push_back(NormalFamily{TwistCertificate{c, c.inverse()}, std::move(basis)});
    }
    return out;
}

std::pair<Element, Element> zero_divisor_witness(const SpecPtr& spec) {
    if (!spec->beta().is_zero()) throw domain_error("zero divisor witness requires beta = 0");
    Element d = Element::gen_d(spec);
    PBWMono udm;
    udm.i = 1;
    udm.k = 1;
    udm.m.assign(spec->n(), 0);
    Element b = Element::gen_du(spec) -
                Element::monomial(spec, udm, spec->alpha()) -
                phi_element(spec, spec->field().one());
    return {std::move(d), std::move(b)};
}

GrowthReport gk_probe(const SpecPtr& spec, unsigned maxN) {
    GrowthReport rep;
    const unsigned n = spec->n();
    rep.lag = 2 * spec->weight();
    for (unsigned N = 0; N <= maxN; ++N) rep.counts.push_back(filtration_count(*spec, N));

    const unsigned D = n + 3;
    // The counts are quasi-polynomial with period 2w, so differences are taken
    // at that lag; D+1 of them need (D+1)*lag + 1 points.
    if (maxN < n + 6 || rep.counts.size() < static_cast<std::size_t>(D + 1) * rep.lag + 1) {
        rep.conclusive = false;
        rep.note = "inconclusive: maxN too small, need at least " +
                   std::to_string((D + 1) * rep.lag) + " with lag " + std::to_string(rep.lag);
        return rep;
    }
    std::vector<long long> seq(rep.counts.begin(), rep.counts.end());
    auto lag_diff = [&](const std::vector<long long>& v) {
        std::vector<long long> d;
        for (std::size_t idx = 0; idx + rep.lag < v.size(); ++idx)
            d.push_back(v[idx + rep.lag] - v[idx]);
        return d;
    };
    for (unsigned round = 0; round < D; ++round) seq = lag_diff(seq);
    rep.top_diffs = seq;
    rep.next_diffs = lag_diff(seq);
    rep.top_positive = !rep.top_diffs.empty() &&
                       std::all_of(rep.top_diffs.begin(), rep.top_diffs.end(),
                                   [](long long v) { return v > 0; });
    rep.top_constant = std::all_of(rep.top_diffs.begin(), rep.top_diffs.end(),
                                   [&](long long v) { return v == rep.top_diffs.front(); });
    rep.next_vanishes = !rep.next_diffs.empty() &&
                        std::all_of(rep.next_diffs.begin(), rep.next_diffs.end(),
                                    [](long long v) { return v == 0; });
    rep.conclusive = true;
    if (rep.ok()) {
        rep.inferred_dimension = D;
        rep.note = "growth is polynomial of degree " + std::to_string(D) + " (lag " +
                   std::to_string(rep.lag) + " differences)";
    } else {
        rep.note = "difference test failed";
    }
    return rep;
}

CenterProbe center_completeness_probe(const SpecPtr& spec, const CenterDescription& desc,
                                      long maxdeg) {
    CenterProbe probe;
    auto central = central_space(spec, maxdeg);

    // All products of the emitted generators within the degree bound.
    std::vector<Element> products;
    products.push_back(Element::one(spec));
    std::vector<std::pair<Element, long>> gens;
    for (const auto& g : desc.generators) {
        long dg = g.weighted_degree();
        if (dg >= 1 && dg <= maxdeg) gens.emplace_back(g, dg);
    }
    for (const auto& [g, dg] : gens) {
        std::vector<Element> grown;
        for (const auto& p : products) {
            Element acc = p;
            while (true) {
                acc = acc * g;
                if (acc.is_zero() || acc.weighted_degree() > maxdeg) break;
                grown.push_back(acc);
            }
        }
        products.insert(products.end(), grown.begin(), grown.end());
    }
    std::vector<Element> all = products;
    all.insert(all.end(), central.begin(), central.end());
    std::vector<PBWMono> index;
    auto coords_all = linalg::coordinates(all, index);
    linalg::Mat prod_rows(coords_all.begin(), coords_all.begin() + products.size());
    linalg::Mat central_rows(coords_all.begin() + products.size(), coords_all.end());
    probe.generated_dim = linalg::rank(prod_rows);
    probe.central_dim = linalg::rank(central_rows);
    probe.equal = linalg::same_row_space(prod_rows, central_rows);
    std::ostringstream detail;
    detail << "central space dim " << probe.central_dim << ", generated subalgebra dim "
           << probe.generated_dim << " at degree <= " << maxdeg;
    probe.detail = detail.str();
    return probe;
}

} // namespace dua
