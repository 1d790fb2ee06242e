#include "dua/serialize.hpp"

namespace dua {

Json element_json(const Element& a) {
    Json arr = Json::array();
    for (const auto& [mono, c] : a.sorted_terms()) {
        Json term;
        term["u"] = mono.i;
        term["du"] = mono.j;
        term["d"] = mono.k;
        term["t"] = mono.m;
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

Json twist_json(const TwistCertificate& tw) {
    return Json{{"c_u", tw.c_u.str()}, {"c_d", tw.c_d.str()}};
}

Json center_json(const CenterDescription& desc) {
    Json gens = Json::array();
    for (std::size_t idx = 0; idx < desc.generators.size(); ++idx) {
        gens.push_back(Json{{"name", desc.generator_names[idx]},
                            {"element", element_json(desc.generators[idx])},
                            {"central", static_cast<bool>(desc.central_ok[idx])}});
    }
    return Json{{"case", desc.case_id}, {"note", desc.note}, {"generators", std::move(gens)}};
}

Json growth_json(const GrowthReport& rep) {
    return Json{{"counts", rep.counts},
                {"lag", rep.lag},
                {"top_differences", rep.top_diffs},
                {"next_differences", rep.next_diffs},
                {"conclusive", rep.conclusive},
                {"top_positive", rep.top_positive},
                {"top_constant", rep.top_constant},
                {"next_vanishes", rep.next_vanishes},
                {"inferred_dimension", rep.inferred_dimension},
                {"note", rep.note}};
}

Json families_json(const std::vector<NormalFamily>& fams) {
    Json arr = Json::array();
    for (const auto& fam : fams) {
        Json basis = Json::array();
        for (const auto& e : fam.basis) basis.push_back(element_json(e));
        arr.push_back(Json{{"twist", twist_json(fam.twist)}, {"basis", std::move(basis)}});
    }
    return arr;
}

Json confluence_json(const ConfluenceReport& rep) {
    return Json{{"confluent", rep.confluent},
                {"via_ddu_first", element_json(rep.via_ddu_first)},
                {"via_duu_first", element_json(rep.via_duu_first)},
                {"ddu_first_step", rep.ddu_first_step},
                {"duu_first_step", rep.duu_first_step},
                {"overlap_identity_holds", rep.identity_ok},
                {"overlap_identity_sign", rep.identity_sign},
                {"note", rep.note}};
}

Json theta_json(const ThetaReport& rep) {
    return Json{{"relations_vanish", rep.relations_vanish},
                {"multiplicative", rep.multiplicative},
                {"pairs_checked", rep.pairs_checked},
                {"images_independent", rep.images_independent},
                {"image_count", rep.image_count},
                {"note", rep.note}};
}

Json gwa_json(const GwaReport& rep) {
    Json combos = Json::array();
    for (const auto& c : rep.combos) {
        combos.push_back(
            Json{{"x_minus_twist",
                  c.combo.convention == GwaConvention::SigmaInverse ? "sigma_inverse" : "sigma"},
                 {"u_image", c.combo.u_is_minus ? "X-" : "X+"},
                 {"relations_ok", c.relations_ok},
                 {"ud_du_match", c.ud_du_match},
                 {"multiplicative", c.multiplicative},
                 {"note", c.note}});
    }
    Json out{{"passing", rep.passing}, {"combos", std::move(combos)}, {"note", rep.note}};
    if (rep.verified) {
        out["verified"] = Json{
            {"x_minus_twist",
             rep.verified->convention == GwaConvention::SigmaInverse ? "sigma_inverse" : "sigma"},
            {"u_image", rep.verified->u_is_minus ? "X-" : "X+"}};
    }
    return out;
}

Json iso_json(const IsoResult& res) {
    Json out;
    switch (res.outcome) {
    case IsoOutcome::Isomorphic: out["outcome"] = "isomorphic"; break;
    case IsoOutcome::NotIsomorphic: out["outcome"] = "not_isomorphic"; break;
    case IsoOutcome::Undecided: out["outcome"] = "undecided"; break;
    }
    out["case"] = res.case_tag;
    out["note"] = res.note;
    if (res.witness) {
        Json t_images = Json::array();
        for (const auto& ti : res.witness->images.t) t_images.push_back(element_json(ti));
        out["eta"] = res.witness->eta.str();
        out["a"] = res.witness->a.str();
        out["b"] = res.witness->b.str();
        out["images"] = Json{{"u", element_json(res.witness->images.u)},
                             {"d", element_json(res.witness->images.d)},
                             {"t", std::move(t_images)}};
    }
    return out;
}

Json skew_json(const SkewLaurentElem& e) {
    Json arr = Json::array();
    std::vector<std::string> names = {"x", "y"};
    for (unsigned idx = 2; idx < e.ring()->sigma.arity(); ++idx)
        names.push_back("t" + std::to_string(idx - 1));
    for (const auto& [k, p] : e.terms()) arr.push_back(Json{{"z", k}, {"poly", p.str(names)}});
    return arr;
}

Json versioned(Json payload) {
    Json out{{"schema", "dua/1"}};
    out["result"] = std::move(payload);
    return out;
}

} // namespace dua
