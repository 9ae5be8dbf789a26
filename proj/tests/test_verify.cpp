#include <doctest.h>

#include <sstream>

#include "partid/verify.hpp"

using namespace partid;

namespace {

VerifyOptions small(int max_n)
{
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.r_hi = 2;
    opt.m_hi = 3;
    return opt;
}

}  // namespace

TEST_CASE("every identity verifies on a small range")
{
    for (const std::string& name : verify_names()) {
        if (name == "all")
            continue;
        VerificationReport rep = verify_identity(name, small(12));
        CHECK(rep.passed());
        CHECK(!rep.checks.empty());
        CHECK(rep.total_cases() > 0);
    }
    CHECK_THROWS_AS(verify_identity("nope", small(5)), std::invalid_argument);
}

TEST_CASE("serial and parallel sweeps agree")
{
    for (const std::string& name : {std::string("refined"), std::string("phi")}) {
        VerifyOptions opt = small(10);
        opt.parallel = false;
        VerificationReport serial = verify_identity(name, opt);
        opt.parallel = true;
        VerificationReport parallel = verify_identity(name, opt);
        REQUIRE(serial.checks.size() == parallel.checks.size());
        for (std::size_t i = 0; i < serial.checks.size(); ++i) {
            CHECK(serial.checks[i].name == parallel.checks[i].name);
            CHECK(serial.checks[i].passed == parallel.checks[i].passed);
            CHECK(serial.checks[i].cases == parallel.checks[i].cases);
        }
    }
}

TEST_CASE("companion identity over its full documented range")
{
    VerifyOptions opt;
    opt.max_n = 40;
    VerificationReport rep = verify_identity("companion", opt);
    CHECK(rep.passed());
}

TEST_CASE("failed checks surface in the report")
{
    VerificationReport rep;
    rep.identity = "demo";
    rep.checks.push_back({"always fine", true, 3, 0.0, ""});
    rep.checks.push_back({"broken", false, 1, 0.0, "n=4: counts differ"});
    CHECK_FALSE(rep.passed());
    std::ostringstream os;
    rep.print(os);
    CHECK(os.str().find("[FAIL] broken") != std::string::npos);
    CHECK(os.str().find("n=4: counts differ") != std::string::npos);
    CHECK(os.str().find("VERIFICATION FAILED") != std::string::npos);
}

TEST_CASE("the aggregate report covers all identities")
{
    VerificationReport rep = verify_identity("all", small(8));
    CHECK(rep.passed());
    bool has_phi = false, has_colored = false;
    for (const auto& c : rep.checks) {
        if (c.name.rfind("phi:", 0) == 0)
            has_phi = true;
        if (c.name.rfind("colored:", 0) == 0)
            has_colored = true;
    }
    CHECK(has_phi);
    CHECK(has_colored);
}
