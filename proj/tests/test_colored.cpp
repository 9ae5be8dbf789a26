#include <doctest.h>

#include <algorithm>
#include <set>

#include "partid/colored.hpp"
#include "partid/enumerate.hpp"
#include "test_util.hpp"

using namespace partid;
using testutil::P;

namespace {

ColoredPartition CP(int r, std::initializer_list<std::pair<int, char>> parts)
{
    std::string text;
    for (const auto& [v, c] : parts) {
        if (!text.empty())
            text += '+';
        text += std::to_string(v);
        text += c;
    }
    return parse_colored(text, r);
}

}  // namespace

TEST_CASE("value map, three colors")
{
    CHECK(format_colored(to_colored(P({2}), 1)) == "1a");
    CHECK(format_colored(to_colored(P({3}), 1)) == "1b");
    CHECK(format_colored(to_colored(P({4}), 1)) == "1c");
    CHECK(format_colored(to_colored(P({5}), 1)) == "2a");
    CHECK(to_colored(Partition(), 1) == ColoredPartition{1, {}});
    CHECK(colored_to_tau(to_colored(P({9, 7, 4, 2}), 1)) == P({9, 7, 4, 2}));
}

TEST_CASE("canonical order and formatting")
{
    ColoredPartition cp = parse_colored("1c+3a+2b+1a", 1);
    CHECK(format_colored(cp) == "3a+2b+1c+1a");
    CHECK(cp.weight() == 7);
    CHECK(cp.color_count(1) == 2);  // a
    CHECK(cp.color_count(3) == 1);  // b
    CHECK(cp.color_count(2) == 1);  // c

    ColoredPartition general = parse_colored("3#501+2#1", 250);
    CHECK(format_colored(general) == "3#501+2#1");

    CHECK_THROWS_AS(parse_colored("3x", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored("3#9", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored("a", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored("0a", 1), std::invalid_argument);
}

TEST_CASE("forbidden pairs, three colors")
{
    CHECK_FALSE(in_colored_family(CP(1, {{1, 'a'}, {1, 'b'}})));
    CHECK_FALSE(in_colored_family(CP(1, {{1, 'b'}, {1, 'c'}})));
    CHECK_FALSE(in_colored_family(CP(1, {{1, 'c'}, {2, 'a'}})));
    CHECK(in_colored_family(CP(1, {{1, 'a'}, {1, 'c'}})));
    CHECK(in_colored_family(CP(1, {{1, 'a'}, {1, 'a'}})));
    CHECK(in_colored_family(CP(1, {{1, 'a'}, {2, 'b'}})));
    CHECK(in_colored_family(CP(1, {{2, 'a'}, {1, 'b'}})));
}

TEST_CASE("mod-6 dilation")
{
    CHECK(colored_to_mod6(CP(1, {{1, 'a'}})) == P({1}));
    CHECK(colored_to_mod6(CP(1, {{1, 'b'}})) == P({3}));
    CHECK(colored_to_mod6(CP(1, {{1, 'c'}})) == P({5}));
    CHECK(colored_to_mod6(ColoredPartition{1, {}}) == Partition());

    // 7+6 is a legal mod-6 family member, 8+6 is not
    CHECK(colored_to_mod6(mod6_to_colored(P({7, 6}))) == P({7, 6}));
    CHECK_THROWS_AS(mod6_to_colored(P({8, 6})), std::invalid_argument);
    CHECK_THROWS_AS(mod6_to_colored(P({2})), std::invalid_argument);
    CHECK_THROWS_AS(colored_to_mod6(CP(1, {{1, 'a'}, {1, 'b'}})), std::invalid_argument);

    // weights shift by one per a-part (down) and c-part (up)
    for (int n = 0; n <= 14; ++n)
        for (const Partition& tau : list_family("B2", n)) {
            ColoredPartition cp = to_colored(tau, 1);
            Partition image = colored_to_mod6(cp);
            CHECK(image.weight() == tau.weight() - cp.color_count(1) + cp.color_count(2));
            CHECK(preset("C2").satisfies(image));
            CHECK(mod6_to_colored(image) == cp);
        }
}

TEST_CASE("difference side lands inside the colored family")
{
    for (int n = 0; n <= 14; ++n)
        for (const Partition& tau : list_family("B2", n)) {
            ColoredPartition cp = to_colored(tau, 1);
            CHECK(in_colored_family(cp));
            CHECK(cp.weight() == (tau.weight() + cp.color_count(1) - cp.color_count(2)) / 3);
        }
    for (int n = 0; n <= 12; ++n)
        for (const Partition& tau : list_family("D2", n, 2)) {
            ColoredPartition cp = to_colored(tau, 2);
            CHECK(in_colored_family(cp));
            CHECK(colored_to_tau(cp) == tau);
        }
    CHECK_THROWS_AS(to_colored(P({1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(to_colored(P({4, 3}), 1), std::invalid_argument);
}

TEST_CASE("general color rules at r = 2")
{
    // {j_i, j_5} forbidden for i <= 4
    CHECK_FALSE(in_colored_family(parse_colored("2#1+2#5", 2)));
    CHECK(in_colored_family(parse_colored("2#5+2#5", 2)));
    // {j_i, (j+1)_l} forbidden exactly when l < i
    CHECK_FALSE(in_colored_family(parse_colored("3#2+2#3", 2)));
    CHECK(in_colored_family(parse_colored("3#3+2#2", 2)));
    CHECK(in_colored_family(parse_colored("3#2+2#2", 2)));
}

TEST_CASE("colored enumeration matches a hand count")
{
    // weight 1: 1a, 1b, 1c
    int count1 = 0;
    for_each_in_colored_family(1, 1, [&](const ColoredPartition&) {
        ++count1;
        return true;
    });
    CHECK(count1 == 3);

    // weight 2: 2a, 2b, 2c, 1a+1a, 1c+1a, 1b+1b, 1c+1c
    std::set<std::string> members;
    for_each_in_colored_family(2, 1, [&](const ColoredPartition& cp) {
        members.insert(format_colored(cp));
        return true;
    });
    CHECK(members == std::set<std::string>{"2a", "2b", "2c", "1a+1a", "1c+1a", "1b+1b",
                                           "1c+1c"});

    // every emitted member passes the membership check; weight 0 is empty
    for_each_in_colored_family(0, 2, [&](const ColoredPartition& cp) {
        CHECK(cp.parts.empty());
        return true;
    });
    for (int w = 0; w <= 8; ++w)
        for_each_in_colored_family(w, 2, [&](const ColoredPartition& cp) {
            CHECK(in_colored_family(cp));
            CHECK(cp.weight() == w);
            return true;
        });
}
