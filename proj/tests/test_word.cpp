#include "permlab/word.hpp"

#include <catch_amalgamated.hpp>

using namespace permlab;

TEST_CASE("height counts ascents minus descents")
{
    CHECK(height(Word{1, 2, 3}) == 2);
    CHECK(height(Word{2, 1}) == -1);
    CHECK(height(Word{1, 5, 2, 3, 4}) == 2);
    CHECK(height(Word{}) == 0);
    CHECK(height(Word{7}) == 0);
}

TEST_CASE("signature marks descents with -1")
{
    CHECK(signature(OneLinePermutation{1, 3, 2}).entries == std::vector<int>{1, -1});
    CHECK(signature(OneLinePermutation::identity(6)).entries == std::vector<int>(5, 1));
    CHECK(signature(OneLinePermutation{3, 8, 2, 5, 4, 9, 6, 7, 1}).entries
          == std::vector<int>{1, -1, 1, -1, 1, -1, 1, -1});
    CHECK(signature(OneLinePermutation{1}).entries.empty());
}

TEST_CASE("descent_stats")
{
    CHECK(descent_stats(Word{2, 3, 1}) == DescentStats{1, 1});
    CHECK(descent_stats(OneLinePermutation::identity(7)) == DescentStats{6, 0});
    CHECK(descent_stats(OneLinePermutation{3, 8, 2, 5, 4, 9, 6, 7, 1}) == DescentStats{4, 4});
    CHECK(descent_stats(Word{}) == DescentStats{0, 0});
}

TEST_CASE("is_ballot checks every prefix")
{
    CHECK(is_ballot(Word{2, 3, 4, 1}));
    CHECK_FALSE(is_ballot(Word{2, 1, 3}));
    CHECK(is_ballot(Word{1, 2, 3}));
    CHECK(is_ballot(Word{}));
    CHECK(is_ballot(Word{3, 4, 1, 2}));
    CHECK_FALSE(is_ballot(Word{3, 4, 2, 1}));
}

TEST_CASE("reversal")
{
    CHECK(reversal(Word{}) == Word{});
    CHECK(reversal(Word{1, 2, 3}) == Word{3, 2, 1});
    CHECK(reversal(Word{7, 5, 9, 6}) == Word{6, 9, 5, 7});
    CHECK(reversal(reversal(Word{4, 1, 8})) == Word{4, 1, 8});
}

TEST_CASE("standard_form relabels order-preservingly")
{
    CHECK(standard_form(Word{2, 7, 5}) == OneLinePermutation{1, 3, 2});
    CHECK(standard_form(Word{1, 2, 3}) == OneLinePermutation{1, 2, 3});
    CHECK(standard_form(Word{8, 4, 9}) == OneLinePermutation{2, 1, 3});
    CHECK_THROWS_AS(standard_form(Word{}), DomainError);
}

TEST_CASE("locate_factor, linear and cyclic")
{
    const OneLinePermutation p{3, 8, 2, 5, 4, 9, 6, 7, 1};
    CHECK(locate_factor(p, Word{9, 6}) == 6u);
    CHECK(locate_factor(Word{2, 6, 8, 3, 7}, Word{3, 7, 2}, true).has_value());
    CHECK_FALSE(locate_factor(Word{2, 6, 8, 3, 7}, Word{3, 7, 2}, false).has_value());
    CHECK_FALSE(locate_factor(Word{1, 2, 3}, Word{2, 1}).has_value());
    CHECK_FALSE(locate_factor(Word{1, 2}, Word{1, 2, 3}, true).has_value());
    CHECK_THROWS_AS(locate_factor(Word{1, 2}, Word{}), DomainError);
}

TEST_CASE("word validation")
{
    CHECK_THROWS_AS(Word({1, 2, 1}), DomainError);
    CHECK_THROWS_AS(Word({0, 2}), DomainError);
    CHECK_THROWS_AS(Word({-3}), DomainError);
    CHECK_THROWS_AS(OneLinePermutation({1, 4, 2}), DomainError);
    CHECK_THROWS_AS(OneLinePermutation({1, 1}), DomainError);
    CHECK(OneLinePermutation{2, 1}.n() == 2);
}

TEST_CASE("concat joins words")
{
    CHECK(concat({Word{1}, Word{}, Word{3, 2}}) == Word{1, 3, 2});
    CHECK_THROWS_AS(concat({Word{1}, Word{1}}), DomainError);
}
