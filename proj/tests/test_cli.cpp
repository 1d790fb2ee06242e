#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dua/cli.hpp"
#include "dua/parser.hpp"
#include "dua/sampling.hpp"
#include "dua/serialize.hpp"
#include "dua/structure.hpp"

#include <fstream>
#include <sstream>

using namespace dua;

namespace {

SpecPtr load(const std::string& src) { return spec_load(src); }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_" + name + ".toml";
    std::ofstream out(path);
    out << content;
    return path;
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expression parsing") {
    auto spec = load("n = 1\nalpha = 2\nbeta = -1\nphi = t1\n");
    Element e = parse_expr("d^2*u - 2*d*u*d + u*d^2 - t1*d", spec);
    CHECK(e.is_zero());

    CHECK(parse_expr("d*(d*u)", spec) == parse_expr("d^2*u", spec));
    CHECK(parse_expr("2/3*u", spec) == Element::gen_u(spec).scale(spec->field().elem(Rat(2, 3))));
    CHECK(parse_expr("-u + u", spec).is_zero());
    CHECK(parse_expr("t1^0", spec) == Element::one(spec));

    CHECK_THROWS_AS(parse_expr("u + ", spec), parse_error);
    CHECK_THROWS_AS(parse_expr("q", spec), parse_error);
    CHECK_THROWS_AS(parse_expr("t2", spec), parse_error);
    CHECK_THROWS_AS(parse_expr("u^(2)", spec), parse_error);
    CHECK_THROWS_AS(parse_expr("u/d", spec), parse_error);
    try {
        parse_expr("u + %", spec);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }

    auto no_roots = load("n = 1\nalpha = 1\nbeta = 1\nphi = t1\n");
    CHECK_THROWS_WITH_AS(parse_expr("H*K", no_roots), doctest::Contains("roots r,s required"),
                         parse_error);

    auto with_roots = load("n = 1\nr = 2\ns = 3\nphi = t1\n");
    auto [H, K] = make_HK(with_roots);
    CHECK(parse_expr("H*K", with_roots) == H * K);
}

TEST_CASE("printing round-trips") {
    std::vector<std::string> sources = {
        "n = 1\nr = 2\ns = 3\nphi = t1\n",
        "n = 2\nalpha = 1\nbeta = 0\nphi = t1*t2\n",
        "n = 1\nfield.kind = cyclotomic\nfield.m = 6\nr = zeta\ns = zeta\nphi = t1\n",
        "n = 0\nfield.kind = rational_function\nfield.arity = 1\nr = 2\ns = 1/2\nphi = t1\n",
    };
    for (const auto& src : sources) {
        auto spec = load(src);
        Sampler sampler(61);
        for (int trial = 0; trial < 40; ++trial) {
            Element e = sampler.element(spec, 4, 4);
            CAPTURE(e.str());
            Element back = parse_expr(e.str(), spec);
            CHECK(back == e);
        }
    }
}

TEST_CASE("element json is canonically sorted") {
    auto spec = load("n = 1\nr = 2\ns = 3\nphi = t1\n");
    Element e = parse_expr("u^2*d + t1 + d*u", spec);
    Json j = element_json(e);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["t"][0] == 1); // t1 first at weighted degree 1
    CHECK(j[1]["du"] == 1);
    CHECK(j[2]["u"] == 2);
    CHECK(versioned(j)["schema"] == "dua/1");
}

TEST_CASE("cli normalize and exit codes") {
    std::string a = write_temp("a", "n = 1\nalpha = 2\nbeta = -1\nphi = t1\n");
    auto r1 = run({"normalize", "--spec", a, "--expr", "d^2*u - 2*d*u*d + u*d^2 - t1*d"});
    CHECK(r1.code == 0);
    CHECK(r1.out == "0\n");

    auto r2 = run({"central", "--spec", a, "--expr", "t1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "true\n");

    auto r3 = run({"central", "--spec", a, "--expr", "d"});
    CHECK(r3.code == 1);

    auto r4 = run({"normalize", "--spec", a, "--expr", "d*(d*u"});
    CHECK(r4.code == 2);

    auto r5 = run({"normalize", "--spec", "missing.toml", "--expr", "u"});
    CHECK(r5.code == 2);

    auto r6 = run({"bogus-command"});
    CHECK(r6.code == 2);
}

TEST_CASE("cli structural commands") {
    std::string rs = write_temp("rs", "n = 1\nr = 2\ns = 3\nphi = t1\n");
    std::string inv = write_temp("inv", "n = 1\nr = 2\ns = 1/2\nphi = t1\n");
    std::string bz = write_temp("bz", "n = 1\nalpha = 1\nbeta = 0\nphi = t1\n");

    auto hk = run({"hk", "--spec", rs});
    CHECK(hk.code == 0);
    CHECK(hk.out.find("H = ") != std::string::npos);

    auto tw = run({"normal-check", "--spec", rs, "--expr", "H"});
    CHECK(tw.code == 0);
    CHECK(tw.out.find("c_u = 3") != std::string::npos);
    auto tw2 = run({"normal-check", "--spec", rs, "--expr", "u + d"});
    CHECK(tw2.code == 1);

    auto cg = run({"center-gens", "--spec", inv, "--json"});
    CHECK(cg.code == 0);
    auto parsed = Json::parse(cg.out);
    CHECK(parsed["schema"] == "dua/1");
    CHECK(parsed["result"]["case"] == 5);

    auto gk = run({"gk", "--spec", rs, "--max-degree", "12"});
    CHECK(gk.code == 0);
    auto gk_short = run({"gk", "--spec", rs, "--max-degree", "7"});
    CHECK(gk_short.code == 3);

    auto th = run({"theta-check", "--spec", rs, "--max-degree", "4"});
    CHECK(th.code == 0);
    auto thz = run({"theta-check", "--spec", bz, "--max-degree", "4"});
    CHECK(thz.code == 2);

    auto gw = run({"gwa-check", "--spec", rs, "--max-degree", "4"});
    CHECK(gw.code == 0);

    auto cf = run({"confluence", "--spec", bz});
    CHECK(cf.code == 0);

    auto sn = run({"search-normal", "--spec", rs, "--max-degree", "2", "--json"});
    CHECK(sn.code == 0);
    CHECK(Json::parse(sn.out)["result"].is_array());

    auto sp = run({"specialize", "--spec", rs, "--lambda", "3", "--expr", "t1*d"});
    CHECK(sp.code == 0);
    CHECK(sp.out.find("gamma = 3") != std::string::npos);
}

TEST_CASE("cli aut and iso") {
    std::string rs = write_temp("rs2", "n = 1\nr = 2\ns = 3\nphi = t1\n");
    std::string sr = write_temp("sr", "n = 1\nr = 3\ns = 2\nphi = t1\n");
    std::string inv = write_temp("inv2", "n = 1\nr = 2\ns = 1/2\nphi = t1\n");

    auto ok = run({"aut-check", "--spec", rs, "--lambda1", "2", "--lambda2", "3", "--a", "6"});
    CHECK(ok.code == 0);
    auto bad = run({"aut-check", "--spec", rs, "--lambda1", "2", "--lambda2", "3", "--a", "1"});
    CHECK(bad.code == 1);
    auto malformed =
        run({"aut-check", "--spec", rs, "--lambda1", "0", "--lambda2", "3", "--a", "6"});
    CHECK(malformed.code == 2);

    auto iso = run({"iso", "--spec1", rs, "--spec2", sr, "--json"});
    CHECK(iso.code == 0);
    auto parsed = Json::parse(iso.out);
    CHECK(parsed["result"]["outcome"] == "isomorphic");
    CHECK(parsed["result"]["case"] == "3b");

    auto niso = run({"iso", "--spec1", rs, "--spec2", inv});
    CHECK(niso.code == 1);

    std::string z = write_temp("z", "n = 1\nfield.kind = cyclotomic\nfield.m = 6\nr = zeta\ns = "
                                    "zeta\nphi = t1\n");
    auto undec = run({"iso", "--spec1", z, "--spec2", z});
    CHECK(undec.code == 3);
}

TEST_CASE("spec round trip through files") {
    std::string path = write_temp("round", "n = 1\nfield.kind = cyclotomic\nfield.m = 4\nr = "
                                           "zeta\ns = -zeta\nphi = t1^2 - 1/2\n");
    auto spec = spec_load_file(path);
    CHECK(spec->field().cyclo_order() == 4);
    CHECK(spec->alpha().is_zero()); // zeta + (-zeta)
    CHECK(spec->beta() == spec->field().elem(-1));
    CHECK(spec->phi_poly().total_degree() == 2);
}
