#include "permlab/codec.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/toeplitz.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace permlab;

TEST_CASE("linear shift reproduces the worked examples")
{
    CHECK(diagonal_shift(parse_one_line("3 8 2 5 4 9 6 7 1"), 4, 6) == parse_one_line("3 8 2 6 4 5 9 7 1"));
    CHECK(diagonal_shift(parse_one_line("1 3 4 8 7 5 9 6 2"), 5, 6) == parse_one_line("1 3 4 8 6 9 7 5 2"));
    CHECK(diagonal_unshift(parse_one_line("3 8 2 6 4 5 9 7 1"), 4, 6) == parse_one_line("3 8 2 5 4 9 6 7 1"));
    CHECK(diagonal_unshift(parse_one_line("1 3 4 8 6 9 7 5 2"), 5, 6) == parse_one_line("1 3 4 8 7 5 9 6 2"));
}

TEST_CASE("cyclic shift reproduces the worked example")
{
    const auto p = parse_cycles("(1 6 8 2 10)(3 12 9 11 7 5 4)");
    const auto s = diagonal_shift(p, 3, 9);
    CHECK(s == parse_cycles("(1 3 6 2 7)(10 9 8 11 5 4 12)"));
    CHECK(format_cycles(s) == "(1 3 6 2 7)(4 12 10 9 8 11 5)");
    CHECK(diagonal_unshift(s, 3, 9) == p);
    CHECK(perm_weight(s) == 4);
}

TEST_CASE("lower core data")
{
    const auto a = lower_core_data(parse_one_line("3 8 2 5 4 9 6 7 1"), 4, 6);
    CHECK(a.m == 4);
    CHECK(a.M == 6);
    CHECK(a.width == 0);
    CHECK(a.core == Word{9, 6});
    CHECK(a.position == CorePosition{std::nullopt, 5});

    const auto b = lower_core_data(parse_one_line("1 3 4 8 7 5 9 6 2"), 5, 6);
    CHECK(b.width == 2);
    CHECK(b.core == Word{7, 5, 9, 6});
    CHECK(b.position == CorePosition{std::nullopt, 4});
    CHECK(b.bar(6) == 7);
    CHECK(b.bar(5) == 5);

    const auto c = lower_core_data(parse_cycles("(1 6 8 2 10)(3 12 9 11 7 5 4)"), 3, 9);
    CHECK(c.width == 3);
    CHECK(c.core == Word{5, 4, 3, 12, 9});
    CHECK(c.position == CorePosition{1, 5});
}

TEST_CASE("upper core data")
{
    const auto a = upper_core_data(parse_one_line("1 3 4 8 6 9 7 5 2"), 5, 6);
    CHECK(a.width == 2);
    CHECK(a.core == Word{6, 9, 7, 5});
    CHECK(a.underbar(6) == 5);

    // 5 sits next to 4, so the upper width is 0 and the core is (i+1) n.
    const auto b = upper_core_data(parse_one_line("3 8 2 6 4 5 9 7 1"), 4, 6);
    CHECK(b.width == 0);
    CHECK(b.core == Word{5, 9});

    const auto c = upper_core_data(parse_cycles("(1 3 6 2 7)(4 12 10 9 8 11 5)"), 3, 9);
    CHECK(c.width == 3);
    CHECK(c.core == Word{4, 12, 10, 9, 8});
}

TEST_CASE("shift domain errors")
{
    const auto p = parse_one_line("3 8 2 5 4 9 6 7 1");
    CHECK_THROWS_AS(diagonal_shift(p, 4, 7), DomainError);
    CHECK_THROWS_AS(diagonal_shift(p, 4, 4), DomainError);
    CHECK_THROWS_AS(diagonal_shift(parse_one_line("2 1 3"), 1, 2), DomainError);
    CHECK_THROWS_AS(diagonal_shift(parse_cycles("(1 2)(3)(4)"), 1, 2), DomainError);
    CHECK_THROWS_AS(upper_core_data(p, 4, 6), DomainError);
    CHECK_THROWS_AS(lower_core_data(p, 8, 6), DomainError);
}

TEST_CASE("core invariants hold on every domain element, n <= 7")
{
    for (int n = 4; n <= 7; ++n) {
        for (const auto& p : enumerate_ballot(n)) {
            for (Letter i = 1; i <= n - 2; ++i) {
                for (Letter j = 1; j <= n - 2; ++j) {
                    if (i == j || !contains_factor(p, Word{i, n, j})) {
                        continue;
                    }
                    const auto cd = lower_core_data(p, i, j);
                    REQUIRE(cd.width >= 0);
                    REQUIRE(cd.width <= cd.M - cd.m + 1);
                    REQUIRE(cd.core.size() == static_cast<std::size_t>(cd.width + 2));
                    REQUIRE(std::find(cd.core.begin(), cd.core.end(), n) != cd.core.end());
                    REQUIRE(locate_factor(p, cd.core) == cd.position.offset + 1);
                }
            }
        }
    }
}

TEST_CASE("cyclic shift is a bijection between neighbouring cells, n <= 9")
{
    for (int n = 4; n <= 9; ++n) {
        const auto all = enumerate_odd_order(n);
        for (Letter i = 1; i <= n - 2; ++i) {
            for (Letter j = 1; j <= n - 2; ++j) {
                if (i == j) {
                    continue;
                }
                std::set<CycleDecomposition> images;
                std::size_t target = 0;
                for (const auto& p : all) {
                    if (contains_cyclic_factor(p, Word{i + 1, n, j + 1})) {
                        ++target;
                    }
                    if (!contains_cyclic_factor(p, Word{i, n, j})) {
                        continue;
                    }
                    const auto s = diagonal_shift(p, i, j);
                    REQUIRE(contains_cyclic_factor(s, Word{i + 1, n, j + 1}));
                    REQUIRE(perm_weight(s) == perm_weight(p));
                    REQUIRE(diagonal_unshift(s, i, j) == p);
                    images.insert(s);
                }
                INFO("n=" << n << " i=" << i << " j=" << j);
                REQUIRE(images.size() == target);
            }
        }
    }
}
