#include "dua/cli.hpp"

#include "dua/acceptance.hpp"
#include "dua/parser.hpp"
#include "dua/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace dua {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

std::vector<FieldElem> parse_lambda(const std::string& csv, const Field& field) {
    std::vector<FieldElem> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) out.push_back(parse_field_elem(cur, field));
    return out;
}

void emit(std::ostream& out, bool json, const Json& payload, const std::string& text) {
    if (json)
        out << versioned(payload).dump(2) << "\n";
    else
        out << text << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact kernel for down-up algebras over polynomial base rings"};
    app.require_subcommand(1);

    std::string spec_path, spec1_path, spec2_path, expr_text, lambda_csv;
    std::string lambda1_text, lambda2_text, a_text, b_text = "0", g_text;
    bool json = false, swap = false;
    unsigned seed = 0;
    unsigned max_degree = 4;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "algebra spec file")->required();
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable output"); };

    auto* cmd_normalize = app.add_subcommand("normalize", "normal form of an expression");
    add_spec(cmd_normalize);
    cmd_normalize->add_option("--expr", expr_text)->required();
    add_json(cmd_normalize);

    auto* cmd_central = app.add_subcommand("central", "is the expression central?");
    add_spec(cmd_central);
    cmd_central->add_option("--expr", expr_text)->required();
    add_json(cmd_central);

    auto* cmd_normal = app.add_subcommand("normal-check", "twist certificate of an expression");
    add_spec(cmd_normal);
    cmd_normal->add_option("--expr", expr_text)->required();
    add_json(cmd_normal);

    auto* cmd_center = app.add_subcommand("center-gens", "center generators with verdicts");
    add_spec(cmd_center);
    cmd_center->add_option("--max-degree", max_degree, "completeness probe degree (0 = skip)");
    add_json(cmd_center);

    auto* cmd_hk = app.add_subcommand("hk", "the H and K elements");
    add_spec(cmd_hk);
    add_json(cmd_hk);

    auto* cmd_gk = app.add_subcommand("gk", "growth dimension probe");
    add_spec(cmd_gk);
    cmd_gk->add_option("--max-degree", max_degree, "largest filtration degree")->required();
    add_json(cmd_gk);

    auto* cmd_theta = app.add_subcommand("theta-check", "skew-Laurent embedding checks");
    add_spec(cmd_theta);
    cmd_theta->add_option("--max-degree", max_degree);
    cmd_theta->add_option("--seed", seed);
    add_json(cmd_theta);

    auto* cmd_gwa = app.add_subcommand("gwa-check", "generalized Weyl realisation checks");
    add_spec(cmd_gwa);
    cmd_gwa->add_option("--max-degree", max_degree);
    add_json(cmd_gwa);

    auto* cmd_spec = app.add_subcommand("specialize", "quotient at t = lambda");
    add_spec(cmd_spec);
    cmd_spec->add_option("--lambda", lambda_csv, "comma-separated t values")->required();
    cmd_spec->add_option("--expr", expr_text, "optional element to push through");
    add_json(cmd_spec);

    auto* cmd_aut = app.add_subcommand("aut-check", "validate automorphism parameters");
    add_spec(cmd_aut);
    cmd_aut->add_option("--lambda1", lambda1_text)->required();
    cmd_aut->add_option("--lambda2", lambda2_text)->required();
    cmd_aut->add_option("--a", a_text)->required();
    cmd_aut->add_option("--b", b_text);
    cmd_aut->add_option("--g", g_text, "univariate polynomial in x standing for g(HK)");
    cmd_aut->add_flag("--swap", swap, "d -> lambda1 u, u -> lambda2 d form");
    add_json(cmd_aut);

    auto* cmd_iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    cmd_iso->add_option("--spec1", spec1_path)->required();
    cmd_iso->add_option("--spec2", spec2_path)->required();
    add_json(cmd_iso);

    auto* cmd_search = app.add_subcommand("search-normal", "normal elements up to a degree");
    add_spec(cmd_search);
    cmd_search->add_option("--max-degree", max_degree);
    add_json(cmd_search);

    auto* cmd_conf = app.add_subcommand("confluence", "overlap resolution report");
    add_spec(cmd_conf);
    add_json(cmd_conf);

    auto* cmd_verify = app.add_subcommand("verify", "run the full acceptance battery");
    cmd_verify->add_option("--seed", seed);

    try {
        std::vector<const char*> argv;
        argv.push_back("dua");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kTrue;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (cmd_normalize->parsed()) {
            auto spec = spec_load_file(spec_path);
            Element e = parse_expr(expr_text, spec);
            emit(out, json, element_json(e), e.str());
            return kTrue;
        }
        if (cmd_central->parsed()) {
            auto spec = spec_load_file(spec_path);
            Element e = parse_expr(expr_text, spec);
            auto res = is_central(e);
            Json j{{"central", res.central}};
            if (!res.central) {
                j["against"] = res.against;
                j["witness"] = element_json(res.witness);
            }
            emit(out, json, j,
                 res.central ? "true" : "false (commutator with " + res.against + " is " +
                                            res.witness.str() + ")");
            return res.central ? kTrue : kFalse;
        }
        if (cmd_normal->parsed()) {
            auto spec = spec_load_file(spec_path);
            Element e = parse_expr(expr_text, spec);
            auto tw = twist_normal_check(e);
            if (!tw) {
                emit(out, json, Json{{"normal", false}}, "none");
                return kFalse;
            }
            Json j = twist_json(*tw);
            j["normal"] = true;
            emit(out, json, j, "c_u = " + tw->c_u.str() + ", c_d = " + tw->c_d.str());
            return kTrue;
        }
        if (cmd_center->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto desc = center_generators(spec);
            Json j = center_json(desc);
            std::ostringstream text;
            text << "case " << desc.case_id << ": " << desc.note;
            for (std::size_t i = 0; i < desc.generators.size(); ++i)
                text << "\n  " << desc.generator_names[i] << " = " << desc.generators[i].str()
                     << "  [central: " << (desc.central_ok[i] ? "yes" : "NO") << "]";
            bool complete_ok = true;
            if (max_degree > 0) {
                auto probe = center_completeness_probe(spec, desc, max_degree);
                j["completeness"] = Json{{"equal", probe.equal},
                                         {"central_dim", probe.central_dim},
                                         {"generated_dim", probe.generated_dim}};
                text << "\n  " << probe.detail << (probe.equal ? " (equal)" : " (MISMATCH)");
                complete_ok = probe.equal;
            }
            emit(out, json, j, text.str());
            return desc.all_central() && complete_ok ? kTrue : kFalse;
        }
        if (cmd_hk->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto [H, K] = make_HK(spec);
            emit(out, json, Json{{"H", element_json(H)}, {"K", element_json(K)}},
                 "H = " + H.str() + "\nK = " + K.str());
            return kTrue;
        }
        if (cmd_gk->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto rep = gk_probe(spec, max_degree);
            std::ostringstream text;
            text << rep.note;
            if (rep.ok()) text << "; inferred dimension " << rep.inferred_dimension;
            emit(out, json, growth_json(rep), text.str());
            if (!rep.conclusive) return kUnsupported;
            return rep.ok() ? kTrue : kFalse;
        }
        if (cmd_theta->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto rep = theta_check(spec, max_degree, seed, 100);
            Json j = theta_json(rep);
            auto ring = SkewRing::make(spec);
            j["images"] = Json{{"u", skew_json(theta(ring, Element::gen_u(spec)))},
                               {"d", skew_json(theta(ring, Element::gen_d(spec)))},
                               {"ud", skew_json(theta(ring, Element::gen_u(spec) *
                                                                Element::gen_d(spec)))},
                               {"du", skew_json(theta(ring, Element::gen_du(spec)))}};
            emit(out, json, j, rep.note);
            return rep.ok() ? kTrue : kFalse;
        }
        if (cmd_gwa->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto rep = gwa_iso_check(spec, max_degree);
            std::ostringstream text;
            text << rep.note;
            for (const auto& c : rep.combos) text << "\n  " << c.note;
            emit(out, json, gwa_json(rep), text.str());
            return rep.ok() ? kTrue : kFalse;
        }
        if (cmd_spec->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto lambda = parse_lambda(lambda_csv, spec->field());
            auto target = specialize_spec(spec, lambda);
            Json j{{"gamma", target->gamma().str()},
                   {"alpha", target->alpha().str()},
                   {"beta", target->beta().str()}};
            std::ostringstream text;
            text << "classical target with gamma = " << target->gamma().str();
            if (!expr_text.empty()) {
                Element img = specialize_into(parse_expr(expr_text, spec), target, lambda);
                j["image"] = element_json(img);
                text << "\nimage = " << img.str();
            }
            emit(out, json, j, text.str());
            return kTrue;
        }
        if (cmd_aut->parsed()) {
            auto spec = spec_load_file(spec_path);
            AutParams params;
            params.lambda1 = parse_field_elem(lambda1_text, spec->field());
            params.lambda2 = parse_field_elem(lambda2_text, spec->field());
            params.a = parse_field_elem(a_text, spec->field());
            params.b = parse_field_elem(b_text, spec->field());
            params.swap = swap;
            if (!g_text.empty()) params.g = parse_poly(g_text, {"x"}, spec->field());
            try {
                GenImages img = aut_from_params(params, spec);
                Json j{{"valid", true},
                       {"images",
                        Json{{"u", element_json(img.u)},
                             {"d", element_json(img.d)},
                             {"t", Json::array({element_json(img.t[0])})}}}};
                emit(out, json, j,
                     "valid automorphism\n  d -> " + img.d.str() + "\n  u -> " + img.u.str() +
                         "\n  t -> " + img.t[0].str());
                return kTrue;
            } catch (const domain_error& e) {
                std::string why = e.what();
                if (why.find("constraint") != std::string::npos ||
                    why.find("violates") != std::string::npos) {
                    emit(out, json, Json{{"valid", false}, {"reason", why}}, "invalid: " + why);
                    return kFalse;
                }
                throw;
            }
        }
        if (cmd_iso->parsed()) {
            auto s1 = spec_load_file(spec1_path);
            auto s2 = spec_load_file(spec2_path);
            auto res = iso_decide(s1, s2);
            std::ostringstream text;
            switch (res.outcome) {
            case IsoOutcome::Isomorphic:
                text << "isomorphic via case " << res.case_tag << " (eta = "
                     << res.witness->eta.str() << ", a = " << res.witness->a.str()
                     << ", b = " << res.witness->b.str() << ")";
                break;
            case IsoOutcome::NotIsomorphic: text << "not isomorphic (case " << res.case_tag << ")"; break;
            case IsoOutcome::Undecided: text << "undecided: " << res.note; break;
            }
            emit(out, json, iso_json(res), text.str());
            if (res.outcome == IsoOutcome::Isomorphic) return kTrue;
            if (res.outcome == IsoOutcome::NotIsomorphic) return kFalse;
            return kUnsupported;
        }
        if (cmd_search->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto fams = normal_search(spec, max_degree);
            std::ostringstream text;
            text << fams.size() << " twist families";
            for (const auto& fam : fams) {
                text << "\n  c_u = " << fam.twist.c_u.str() << ", c_d = " << fam.twist.c_d.str()
                     << ": dim " << fam.basis.size();
                for (const auto& e : fam.basis) text << "\n    " << e.str();
            }
            emit(out, json, families_json(fams), text.str());
            return kTrue;
        }
        if (cmd_conf->parsed()) {
            auto spec = spec_load_file(spec_path);
            auto rep = confluence_check(spec);
            std::ostringstream text;
            text << (rep.confluent ? "confluent" : "NOT CONFLUENT") << "\n  " << rep.ddu_first_step
                 << " => " << rep.via_ddu_first.str() << "\n  " << rep.duu_first_step << " => "
                 << rep.via_duu_first.str() << "\n  " << rep.note;
            emit(out, json, confluence_json(rep), text.str());
            return rep.confluent && rep.identity_ok ? kTrue : kFalse;
        }
        if (cmd_verify->parsed()) {
            return run_acceptance(seed, out) ? kTrue : kFalse;
        }
        err << "error: no command\n";
        return kUsage;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const unsupported_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace dua
