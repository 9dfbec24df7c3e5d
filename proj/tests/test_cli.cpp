#include "support.hpp"

#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace testing_support;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tdc");
    std::ostringstream out, err;
    const int code = tdc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name); }

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("hodge on theta") {
    const auto r = run({"hodge", fx("theta.skel")});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "betti=2"));
    CHECK(has_line(r.out, "h[1][1]=1(derived-by-sequence)"));
    CHECK(has_line(r.out, "PD=holds"));
}

TEST_CASE("json output carries the same values as text") {
    const auto text = run({"hodge", fx("ac3-sequences.skel")});
    const auto js = run({"--format", "json", "hodge", fx("ac3-sequences.skel")});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["S_X"] == 5);
    CHECK(j["h[1][1]"]["value"] == 6);
    CHECK(j["h[1][0]"]["provenance"] == "model-value");
    CHECK(has_line(text.out, "h[1][1]=6(derived-by-sequence)"));
    CHECK(j["G(X)"] == nlohmann::json::array({"v1", "v2"}));
}

TEST_CASE("infinite dimensions print as inf") {
    const auto r = run({"--format", "json", "hodge", fx("elliptic-good-reduction.skel")});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["h[1][1]"]["value"] == "inf");
    CHECK(j["PD"] == "fails-infinite");
    CHECK(j["finiteness"] == "infinite");
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"pd", fx("ac6-pairing.skel")},
             {"audit", fx("ac1-global-hodge.skel")},
             {"--format", "json", "mv", fx("ac7-mv-circle.skel"), "--region", "seed=v", "--region",
              "seed=v cut=e1:2/3 cut=e2:1/3", "--region", "seed=w cut=e1:1/3 cut=e2:2/3"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("green") {
    auto r = run({"green", fx("path.skel"), "--measure", "v1:1 v2:-1", "--basepoint", "v1"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "v2=1"));
    r = run({"green", fx("ac4-potential.skel"), "--measure", "p:1 q:-1", "--basepoint", "p"});
    CHECK(has_line(r.out, "q=1/2"));
    r = run({"green", fx("theta.skel"), "--measure", "v1:1 e3@1/2:-1", "--basepoint", "v2"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "v1=-3/16"));
    CHECK(has_line(r.out, "e3@1/2=9/32"));
    r = run({"green", fx("path.skel"), "--measure", "v1:1", "--basepoint", "v1"});
    CHECK(r.code == tdc::cli::kNonzeroMass);
    CHECK(r.err.find("no solution: total mass nonzero (mass = 1)") != std::string::npos);
    r = run({"green", fx("path.skel"), "--measure", "v9:1", "--basepoint", "v1"});
    CHECK(r.code == tdc::cli::kInvalidInput);
}

TEST_CASE("subset") {
    auto r = run({"subset", fx("ac5-star6.skel"), "--region",
                  "seed=c cut=s1:1/2 cut=s2:1/2 cut=s3:1/2 cut=s4:1/2 cut=s5:1/2 cut=s6:1/2"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "k=6"));
    CHECK(has_line(r.out, "full.h[1][0]=5(computed-by-cochain)"));
    CHECK(has_line(r.out, "compact.h[0][1]=5(computed-by-cochain)"));
    r = run({"subset", fx("circle.skel"), "--region", "seed=v1"});
    CHECK(r.code == tdc::cli::kNotStrictlySimple);
    r = run({"subset", fx("circle.skel")});
    CHECK(r.code == tdc::cli::kInvalidInput);
}

TEST_CASE("mv") {
    const auto r = run({"mv", fx("ac7-mv-circle.skel"), "--region", "seed=v", "--region", "seed=v cut=e1:2/3 cut=e2:1/3",
                        "--region", "seed=w cut=e1:1/3 cut=e2:2/3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dims=1,2,2,1,0,0") != std::string::npos);
    const auto bad = run({"mv", fx("ac7-mv-circle.skel"), "--region", "seed=v"});
    CHECK(bad.code == tdc::cli::kInvalidInput);
}

TEST_CASE("audit") {
    const auto r = run({"audit", fx("circle-picrank3.skel")});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "sequence=harmonic exact=yes terms=3,4,1"));
    CHECK(has_line(r.out, "liu=n/a"));
    const auto t = run({"audit", fx("theta.skel")});
    CHECK(has_line(t.out, "liu=pass"));
}

TEST_CASE("bad input and usage") {
    CHECK(run({}).code == tdc::cli::kInvalidInput);
    CHECK(run({"frobnicate", fx("theta.skel")}).code == tdc::cli::kInvalidInput);
    CHECK(run({"hodge", fx("does-not-exist.skel")}).code == tdc::cli::kInvalidInput);
    CHECK(run({"--format", "yaml", "hodge", fx("theta.skel")}).code == tdc::cli::kInvalidInput);
    const auto r = run({"pd", fx("elliptic-good-reduction.skel")});
    CHECK(r.code == 0);
    CHECK(r.out.find("refused") != std::string::npos);
}
