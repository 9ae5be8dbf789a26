#include <doctest.h>

#include <map>

#include "partid/enumerate.hpp"
#include "partid/series.hpp"
#include "test_util.hpp"

using namespace partid;

TEST_CASE("identity series")
{
    TruncatedSeries one(10, 0);
    CHECK(one.coeff(0) == 1);
    for (int n = 1; n <= 10; ++n)
        CHECK(one.coeff(n) == 0);
    CHECK_THROWS_AS(one.coeff(11), std::out_of_range);
    CHECK_THROWS_AS(TruncatedSeries(300, 0), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(10, 9), std::invalid_argument);
}

TEST_CASE("checked arithmetic traps overflow")
{
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK(checked_add(2, 2) == 4);
}

TEST_CASE("single geometric factor")
{
    TruncatedSeries s(9, 0);
    s.mul_inverse_factor(2);
    for (int n = 0; n <= 9; ++n)
        CHECK(s.coeff(n) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("all part sizes give the partition numbers")
{
    TruncatedSeries s(10, 0);
    s.mul_progression(1, 1);
    // independent oracle: brute-force enumeration
    for (int n = 0; n <= 10; ++n)
        CHECK(s.coeff(n) == static_cast<i64>(testutil::naive_partitions(n).size()));
    CHECK(s.coeff(10) == 42);
}

TEST_CASE("mod-6 product values")
{
    TruncatedSeries s = family_series("A1", 20);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(15) == 20);  // the refinement table of 15 has 20 entries per side
    for (int n = 0; n <= 20; ++n)
        CHECK(s.coeff(n) == count_A(1, n));
}

TEST_CASE("marked mod-6 product matches the table rows")
{
    TruncatedSeries s = family_series("B1", 15);
    CHECK(s.coeff(15, {1, 1}) == 5);
    CHECK(s.coeff(15, {0, 0}) == 7);
    CHECK(s.coeff(15, {3, 0}) == 4);
    CHECK(s.coeff(15, {6, 0}) == 1);
    CHECK(s.coeff(0, {0, 0}) == 1);
    CHECK(s.coeff(15, {2, 0}) == 0);
}

TEST_CASE("marked products match enumeration cell by cell")
{
    for (const char* name : {"B1", "C1"}) {
        TruncatedSeries s = family_series(name, 18);
        for (int n = 0; n <= 18; ++n) {
            std::map<std::vector<int>, i64> cells;
            for (const auto& [key, val] : s.terms(n))
                cells[s.unpack(key)] = val;
            CHECK(cells == count_family_by_type(name, n));
        }
    }
    TruncatedSeries d = family_series("D1", 12, 2);
    for (int n = 0; n <= 12; ++n) {
        std::map<std::vector<int>, i64> cells;
        for (const auto& [key, val] : d.terms(n))
            cells[d.unpack(key)] = val;
        CHECK(cells == count_family_by_type("D1", n, 2));
    }
}

TEST_CASE("colored product values")
{
    TruncatedSeries s = family_series("colored", 8, 1);
    // weight 1: one member per color; b is unmarked
    CHECK(s.coeff(1, {0, 0}) == 1);
    CHECK(s.coeff(1, {1, 0}) == 1);
    CHECK(s.coeff(1, {0, 1}) == 1);
    // weight 2: 2b and 1b+1b unmarked, 2a, 2c, 1a+1a, 1c+1a, 1c+1c marked
    CHECK(s.coeff(2, {0, 0}) == 2);
    CHECK(s.coeff(2, {1, 0}) == 1);
    CHECK(s.coeff(2, {0, 1}) == 1);
    CHECK(s.coeff(2, {2, 0}) == 1);
    CHECK(s.coeff(2, {1, 1}) == 1);
    CHECK(s.coeff(2, {0, 2}) == 1);
}

TEST_CASE("product algebra laws on small instances")
{
    TruncatedSeries a(12, 2), b(12, 2), c(12, 2);
    a.mul_progression(1, 2, {1, 0});
    b.mul_progression(2, 3, {0, 1});
    c.mul_progression(1, 1, {0, 0});

    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));

    TruncatedSeries one(12, 2);
    CHECK(one * a == a);
    CHECK(a * one == a);

    // multiplying by factors one at a time equals the full product
    TruncatedSeries d(12, 2);
    d.mul_progression(1, 2, {1, 0});
    d.mul_progression(2, 3, {0, 1});
    CHECK(d == a * b);
}

TEST_CASE("marker exponent bookkeeping")
{
    TruncatedSeries s(6, 2);
    s.mul_inverse_factor(2, {1, 0});
    CHECK(s.coeff(4, {2, 0}) == 1);
    CHECK(s.coeff(4, {1, 0}) == 0);
    CHECK_THROWS_AS(s.coeff(4, {1}), std::invalid_argument);
    CHECK(s.unpack(s.pack({3, 7})) == std::vector<int>{3, 7});
}
