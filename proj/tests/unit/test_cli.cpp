#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {
struct Out {
    int code;
    std::string out, err;
};

Out run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = spin7::cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

nlohmann::json js(const Out& o) { return nlohmann::json::parse(o.out); }
}  // namespace

TEST_CASE("ricci: the g2 point of 5.1") {
    Out o = run({"ricci", "--family", "5.1", "--set", "a1=1,b1=0,b2=0", "--hol", "R+su2c"});
    REQUIRE(o.code == 0);
    auto j = js(o);
    CHECK(j["consistent"] == true);
    CHECK(j["ricci"]["diag"] == nlohmann::json({"12", "12", "12", "12", "12", "12", "12", "0"}));
    // omitted parameters are zero
    Out o2 = run({"ricci", "--family", "5.1", "--set", "a1=1", "--hol", "R+su2c"});
    CHECK(o2.out == o.out);
    Out bad = run({"ricci", "--family", "5.1", "--set", "a1=1", "--hol", "su2"});
    CHECK(bad.code == 1);
    CHECK(js(bad)["consistent"] == false);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"ricci", "--family", "9.9", "--set", "a1=1", "--hol", "zero"}).code == 2);
    CHECK(run({"ricci", "--family", "5.1", "--set", "q=1", "--hol", "zero"}).code == 2);
    CHECK(run({"invariants", "--algebra", "e8", "--space", "forms3"}).code == 2);
    CHECK(run({"--format", "yaml", "iso", "--form", "e_123"}).code == 2);
    Out o = run({"iso", "--form", "e_12 + e_19"});
    CHECK(o.code == 2);
    CHECK(o.err.find("offset 7") != std::string::npos);
}

TEST_CASE("iso of the R+su2 torsion") {
    Out o = run({"iso", "--form", "e_135 - e_245 + e_146 + e_236"});
    REQUIRE(o.code == 0);
    auto j = js(o);
    CHECK(j["dim"] == 4);
    CHECK(j["name"] == "R+su2");
}

TEST_CASE("invariants and markdown output") {
    auto j = js(run({"invariants", "--algebra", "su3", "--space", "spinors"}));
    CHECK(j["dim"] == 4);
    CHECK(j["basis"] == nlohmann::json({"Psi_1", "Psi_2", "Psi_9", "Psi_10"}));
    auto g = js(run({"invariants", "--algebra", "g2", "--space", "forms3"}));
    CHECK(g["dim"] == 1);
    Out md = run({"invariants", "--algebra", "g2", "--space", "forms4", "--format", "markdown"});
    CHECK(md.code == 0);
    CHECK(md.out.rfind("- **algebra**", 0) == 0);
}

TEST_CASE("curvature and reconstruct") {
    Out c = run({"curvature", "--case", "5.1.1", "--family", "5.1", "--set", "a1=1,b1=2,b2=3"});
    CHECK(c.code == 0);
    auto j = js(c);
    CHECK(j["checks"]["torsion_bianchi"] == true);
    CHECK(j["checks"]["plain_bianchi"] == false);
    CHECK(run({"curvature", "--case", "5.1.2", "--family", "5.1", "--set", "a1=1,b1=1"}).code == 2);
    for (const char* ex : {"1", "2", "t2"}) {
        CAPTURE(ex);
        Out r = run({"reconstruct", "--example", ex});
        CHECK(r.code == 0);
        CHECK(js(r)["jacobi"] == true);
    }
    CHECK(js(run({"reconstruct", "--example", "2", "--sign", "-1"}))["jacobi"] == true);
}
