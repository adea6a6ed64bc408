#include "permlab/codec.hpp"
#include "permlab/enumeration.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace permlab;

TEST_CASE("small ballot sets")
{
    const auto b3 = enumerate_ballot(3);
    REQUIRE(b3.size() == 3);
    CHECK(b3[0] == OneLinePermutation{1, 2, 3});
    CHECK(b3[1] == OneLinePermutation{1, 3, 2});
    CHECK(b3[2] == OneLinePermutation{2, 3, 1});
    CHECK(enumerate_ballot(4).size() == 9);
    CHECK(enumerate_ballot(1) == std::vector<OneLinePermutation>{OneLinePermutation{1}});
}

TEST_CASE("small odd-order sets")
{
    const auto p3 = enumerate_odd_order(3);
    REQUIRE(p3.size() == 3);
    CHECK(format_cycles(p3[0]) == "(1)(2)(3)");
    CHECK(format_cycles(p3[1]) == "(1 2 3)");
    CHECK(format_cycles(p3[2]) == "(1 3 2)");
    CHECK(enumerate_odd_order(4).size() == 9);
    CHECK(format_cycles(enumerate_odd_order(1).at(0)) == "(1)");
}

TEST_CASE("ballot traversal matches a filter over S_n")
{
    for (int n = 1; n <= 8; ++n) {
        std::vector<OneLinePermutation> expected;
        for (const auto& v : oracle::all_permutations(n)) {
            if (oracle::ballot(v)) {
                expected.emplace_back(v);
            }
        }
        INFO("n=" << n);
        CHECK(enumerate_ballot(n) == expected);
    }
}

TEST_CASE("odd-order traversal matches a filter over S_n and is sorted")
{
    for (int n = 1; n <= 8; ++n) {
        std::set<OneLinePermutation> expected;
        for (const auto& v : oracle::all_permutations(n)) {
            if (oracle::odd_order(v)) {
                expected.emplace(v);
            }
        }
        const auto got = enumerate_odd_order(n);
        std::set<OneLinePermutation> got_set;
        for (const auto& p : got) {
            got_set.insert(to_one_line(p));
            REQUIRE(canonicalize_cycles(p.cycles()) == p);
        }
        INFO("n=" << n);
        CHECK(got.size() == expected.size());
        CHECK(got_set == expected);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    }
}

TEST_CASE("closed form")
{
    CHECK(ballot_count_closed(1) == 1);
    CHECK(ballot_count_closed(6) == 225);
    CHECK(ballot_count_closed(7) == 1575);
    const std::vector<std::uint64_t> expected{1, 1, 3, 9, 45, 225, 1575, 11025, 99225, 893025};
    for (int n = 1; n <= 10; ++n) {
        CHECK(ballot_count_closed(n) == expected[static_cast<std::size_t>(n - 1)]);
    }
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
}

TEST_CASE("traversals respect the budget")
{
    CHECK_THROWS_AS(enumerate_ballot(11), BudgetError);
    CHECK_THROWS_AS(enumerate_odd_order(12), BudgetError);
    CHECK_NOTHROW(enumerate_ballot(5, Budget::at_least(12)));
    CHECK_THROWS_AS(enumerate_ballot(0), DomainError);
    CHECK(parse_kind("odd") == Kind::odd);
    CHECK_THROWS_AS(parse_kind("even"), DomainError);
}
