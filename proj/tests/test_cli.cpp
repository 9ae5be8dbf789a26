#include <doctest.h>

#include <json.hpp>

#include "partid/enumerate.hpp"
#include "test_util.hpp"

using testutil::cli;

namespace {

const char* kTable15 =
    "(m1,m2)\tB1\tB2\n"
    "(0,0)\t15\t15\n"
    "\t12+3\t12+3\n"
    "\t9+6\t9+6\n"
    "\t9+3+3\t9+3+3\n"
    "\t6+6+3\t6+6+3\n"
    "\t6+3+3+3\t6+3+3+3\n"
    "\t3+3+3+3+3\t3+3+3+3+3\n"
    "(1,1)\t10+3+2\t13+2\n"
    "\t9+4+2\t11+4\n"
    "\t8+4+3\t10+5\n"
    "\t6+4+3+2\t9+4+2\n"
    "\t4+3+3+3+2\t7+5+3\n"
    "(3,0)\t9+2+2+2\t11+2+2\n"
    "\t8+3+2+2\t9+2+2+2\n"
    "\t6+3+2+2+2\t8+5+2\n"
    "\t3+3+3+2+2+2\t5+5+5\n"
    "(0,3)\t4+4+4+3\t7+4+4\n"
    "(2,2)\t4+4+3+2+2\t7+4+2+2\n"
    "(4,1)\t4+3+2+2+2+2\t7+2+2+2+2\n"
    "(6,0)\t3+2+2+2+2+2+2\t5+2+2+2+2+2\n";

const char* kChainForward =
    "lambda = 39+38+34+28+26+26+18+16+3+2\n"
    "mu = 19+17+14+13+13+8+1\n"
    "nu = 11+10+9+9+8+8+6+5+5+4+4+2+2+1+1\n"
    "pi = 11+11+10+10+9+9+9+9+8+8+8+8+6+6+5+5+5+5+4+4+4+4+2+2+2+2+1+1+1+1\n"
    "rho = 13+13+13+11+11+10+10+9+9+9+9+8+8+8+8+6+6+6+6+6+5+5+5+5+4+4+4+4"
    "+2+2+2+2+1+1+1+1+1+1+1\n"
    "tau = 39+32+28+28+24+20+15+15+11+7+5+3+3\n";

}  // namespace

TEST_CASE("count command")
{
    auto r = cli({"count", "C1", "11"});
    CHECK(r.code == 0);
    CHECK(r.out == "15\n");
    CHECK(cli({"count", "C2", "11"}).out == "15\n");
    CHECK(cli({"count", "B1", "15", "--type", "1,1"}).out == "5\n");
    CHECK(cli({"count", "A1", "0"}).out == "1\n");
    CHECK(cli({"count", "D1", "5", "--r", "2", "--type", "0,0,0,0"}).out == "1\n");

    // congruence-family counts come off the product series and agree with
    // enumeration-backed counting
    for (int n : {9, 17, 26})
        CHECK(cli({"count", "B1", std::to_string(n)}).out ==
              std::to_string(partid::count_family("B1", n)) + "\n");
    CHECK(cli({"count", "A1", "200"}).out == "4179005795\n");
}

TEST_CASE("list command")
{
    auto r = cli({"list", "C2", "11"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "11\n"
          "10+1\n"
          "9+1+1\n"
          "8+3\n"
          "8+1+1+1\n"
          "7+4\n"
          "7+1+1+1+1\n"
          "6+5\n"
          "6+1+1+1+1+1\n"
          "5+5+1\n"
          "5+1+1+1+1+1+1\n"
          "4+4+3\n"
          "4+4+1+1+1\n"
          "4+1+1+1+1+1+1+1\n"
          "1+1+1+1+1+1+1+1+1+1+1\n");

    CHECK(cli({"list", "C1", "11"}).out ==
          "11\n"
          "9+1+1\n"
          "7+3+1\n"
          "7+1+1+1+1\n"
          "6+5\n"
          "6+3+1+1\n"
          "6+1+1+1+1+1\n"
          "5+5+1\n"
          "5+3+3\n"
          "5+3+1+1+1\n"
          "5+1+1+1+1+1+1\n"
          "3+3+3+1+1\n"
          "3+3+1+1+1+1+1\n"
          "3+1+1+1+1+1+1+1+1\n"
          "1+1+1+1+1+1+1+1+1+1+1\n");
}

TEST_CASE("map command, chain family")
{
    auto fwd = cli({"map", "forward", "macmahon", "39+38+34+28+26+26+18+16+3+2"});
    CHECK(fwd.code == 0);
    CHECK(fwd.out == kChainForward);

    auto inv = cli({"map", "inverse", "macmahon", "39+32+28+28+24+20+15+15+11+7+5+3+3"});
    CHECK(inv.code == 0);
    CHECK(inv.out == kChainForward);  // same six lines, reconstructed

    auto empty = cli({"map", "forward", "macmahon", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out == "lambda =\nmu =\nnu =\npi =\nrho =\ntau =\n");

    auto traced = cli({"map", "forward", "macmahon", "39+38+34+28+26+26+18+16+3+2", "--trace"});
    CHECK(traced.code == 0);
    CHECK(traced.out.find("phi: flat skeleton = 7+5+5+4+4+2+1\n") != std::string::npos);
    CHECK(traced.out.find("phi: surplus columns = 6,6,5,2\n") != std::string::npos);
    CHECK(traced.out.find("phi: insert 6 -> ") != std::string::npos);

    CHECK(cli({"map", "forward", "colored", "2"}).out == "1a\n");
    CHECK(cli({"map", "forward", "colored", "3"}).out == "1b\n");
    CHECK(cli({"map", "forward", "colored", "4"}).out == "1c\n");
    CHECK(cli({"map", "forward", "colored", "7+4"}).out == "2c+1c\n");
    CHECK(cli({"map", "inverse", "colored", "2c+1c"}).out == "7+4\n");

    auto companion = cli({"map", "forward", "companion", "7+5"});
    CHECK(companion.code == 0);
    CHECK(companion.out == "colored = 2c+2a\nc2 = 8+4\n");
    CHECK(cli({"map", "inverse", "companion", "8+4"}).out == "colored = 2c+2a\ntau = 7+5\n");

    auto andrews = cli({"map", "forward", "andrews", "5", "--r", "2"});
    CHECK(andrews.code == 0);
    CHECK(andrews.out ==
          "lambda = 5\nmu =\nnu =\npi =\nrho = 1+1+1+1+1\ntau = 5\n");
}

TEST_CASE("table command")
{
    auto r = cli({"table", "15"});
    CHECK(r.code == 0);
    CHECK(r.out == kTable15);

    auto zero = cli({"table", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "(m1,m2)\tB1\tB2\n(0,0)\t\t\n");
}

TEST_CASE("series command")
{
    auto r = cli({"series", "B1", "--N", "15"});
    CHECK(r.code == 0);
    CHECK(r.out.find("15\t1,1\t5\n") != std::string::npos);
    CHECK(r.out.find("0\t0,0\t1\n") != std::string::npos);
    CHECK(r.out.find("15\t0,0\t7\n") != std::string::npos);

    auto a1 = cli({"series", "A1", "--N", "15"});
    CHECK(a1.out.find("15\t\t20\n") != std::string::npos);
}

TEST_CASE("verify command")
{
    auto r = cli({"verify", "macmahon", "--max-n", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    auto serial = cli({"verify", "refined", "--max-n", "10", "--serial"});
    CHECK(serial.code == 0);
}

TEST_CASE("json output")
{
    using nlohmann::json;

    auto count = cli({"--json", "count", "B1", "15", "--type", "1,1"});
    json jc = json::parse(count.out);
    CHECK(jc["count"] == 5);
    CHECK(cli({"count", "B1", "15", "--type", "1,1", "--json"}).out == count.out);
    CHECK(jc["preset"] == "B1");
    CHECK(jc["type"] == std::vector<int>{1, 1});

    auto list = cli({"--json", "list", "A1", "6"});
    json jl = json::parse(list.out);
    CHECK(jl["count"] == 4);
    CHECK(jl["partitions"].size() == 4);
    CHECK(jl["partitions"][0] == std::vector<int>{6});

    auto map = cli({"--json", "map", "forward", "macmahon", "3"});
    json jm = json::parse(map.out);
    CHECK(jm["tau"] == std::vector<int>{3});
    CHECK(jm["rho"] == std::vector<int>{1, 1, 1});

    auto table = cli({"--json", "table", "15"});
    json jt = json::parse(table.out);
    CHECK(jt["rows"].size() == 7);
    CHECK(jt["rows"][0]["type"] == std::vector<int>{0, 0});
    CHECK(jt["rows"][0]["b1"].size() == 7);

    auto verify = cli({"--json", "verify", "lemmas", "--max-n", "8"});
    json jv = json::parse(verify.out);
    CHECK(jv["passed"] == true);

    auto series = cli({"--json", "series", "colored", "--N", "4", "--r", "1"});
    json js = json::parse(series.out);
    CHECK(js["terms"][0]["value"] == 1);
}

TEST_CASE("usage and input errors exit with code 2")
{
    CHECK(cli({"count", "Z9", "5"}).code == 2);
    CHECK(cli({"count", "A1", "999"}).code == 2);
    CHECK(cli({"count", "A1", "5", "--type", "1,1"}).code == 2);
    CHECK(cli({"map", "forward", "macmahon", "7"}).code == 2);
    CHECK(cli({"map", "sideways", "macmahon", "3"}).code == 2);
    CHECK(cli({"map", "forward", "macmahon", "3+x"}).code == 2);
    CHECK(cli({"table", "70"}).code == 2);
    CHECK(cli({"nosuchcommand"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"verify", "nosuchidentity"}).code == 2);
    CHECK(cli({"series", "Z1"}).code == 2);
}

TEST_CASE("identical invocations produce identical bytes")
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"table", "15"},
          std::vector<std::string>{"list", "B2", "15"},
          std::vector<std::string>{"series", "colored", "--N", "10"},
          std::vector<std::string>{"map", "forward", "macmahon", "38+16+3"}}) {
        auto first = cli(args);
        auto second = cli(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}
