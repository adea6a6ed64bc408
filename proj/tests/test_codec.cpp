#include "permlab/codec.hpp"

#include <catch_amalgamated.hpp>

using namespace permlab;

TEST_CASE("one-line parsing accepts spaces and commas")
{
    CHECK(parse_one_line("3 8 2 5 4 9 6 7 1") == OneLinePermutation{3, 8, 2, 5, 4, 9, 6, 7, 1});
    CHECK(parse_one_line("3,8,2,5,4,9,6,7,1") == OneLinePermutation{3, 8, 2, 5, 4, 9, 6, 7, 1});
    CHECK(parse_one_line(" 2, 1 ") == OneLinePermutation{2, 1});
    CHECK(parse_one_line("10 1 2 3 4 5 6 7 8 9 11").n() == 11);
}

TEST_CASE("malformed one-line input is rejected")
{
    CHECK_THROWS_AS(parse_one_line("1 x 2"), DomainError);
    CHECK_THROWS_AS(parse_one_line("1 3"), DomainError);
    CHECK_THROWS_AS(parse_one_line("1 -2"), DomainError);
    CHECK_THROWS_AS(parse_one_line("1 1"), DomainError);
}

TEST_CASE("cycle parsing requires parentheses and a full partition")
{
    const auto p = parse_cycles("(3 12 9 11 7 5 4)(6 8 2 10 1)");
    CHECK(format_cycles(p) == "(1 6 8 2 10)(3 12 9 11 7 5 4)");
    CHECK(format_cycles(parse_cycles("(1,4,3) (2)")) == "(1 4 3)(2)");
    CHECK_THROWS_AS(parse_cycles("1 4 3"), DomainError);
    CHECK_THROWS_AS(parse_cycles("(1 4 3"), DomainError);
    CHECK_THROWS_AS(parse_cycles("(1 4)(3)"), DomainError);
    CHECK_THROWS_AS(parse_cycles("()"), DomainError);
    CHECK_THROWS_AS(parse_cycles(""), DomainError);
}

TEST_CASE("formatting round-trips")
{
    CHECK(format_word(parse_word("3 8 2")) == "3 8 2");
    CHECK(format_word(Word{}).empty());
    const std::string cycles = "(1 3 6 2 7)(4 12 10 9 8 11 5)";
    CHECK(format_cycles(parse_cycles(cycles)) == cycles);
}
