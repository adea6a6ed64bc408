#include "permlab/bijections.hpp"
#include "permlab/codec.hpp"
#include "permlab/toeplitz.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace permlab;

namespace {

std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

/// Distinct letters drawn from [1, 3 * length].
Word random_word(std::size_t length)
{
    std::vector<Letter> pool(3 * length);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng());
    pool.resize(length);
    return Word(std::move(pool));
}

OneLinePermutation random_permutation(int n)
{
    std::vector<Letter> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng());
    return OneLinePermutation(std::move(v));
}

OneLinePermutation random_ballot(int n)
{
    for (;;) {
        auto p = random_permutation(n);
        if (is_ballot(p)) {
            return p;
        }
    }
}

/// Random odd-order permutation: shuffle [n], then cut into odd-length pieces.
CycleDecomposition random_odd_order(int n)
{
    const auto p = random_permutation(n);
    std::vector<std::vector<Letter>> raw;
    std::size_t k = 0;
    while (k < p.size()) {
        const std::size_t left = p.size() - k;
        std::uniform_int_distribution<std::size_t> pick(0, (left - 1) / 2);
        const std::size_t len = 2 * pick(rng()) + 1;
        raw.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(k), p.begin() + static_cast<std::ptrdiff_t>(k + len));
        k += len;
    }
    return canonicalize_cycles(std::move(raw));
}

} // namespace

TEST_CASE("word statistics on random words")
{
    std::uniform_int_distribution<std::size_t> length(0, 14);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto w = random_word(length(rng()));
        const auto s = descent_stats(w);
        REQUIRE(height(reversal(w)) == -height(w));
        REQUIRE(height(w) == s.asc - s.des);
        if (!w.empty()) {
            REQUIRE(s.asc + s.des == static_cast<int>(w.size()) - 1);
            REQUIRE(signature(standard_form(w)) == signature(w));
        }
        int lowest = 0;
        for (std::size_t len = 1; len <= w.size(); ++len) {
            lowest = std::min(lowest, height(w.letters().first(len)));
        }
        REQUIRE(is_ballot(w) == (lowest >= 0));
    }
}

TEST_CASE("reversing a cycle swaps cyclic descents and ascents, for every cycle of length <= 9")
{
    for (int k = 1; k <= 9; ++k) {
        std::vector<Letter> rest(static_cast<std::size_t>(k - 1));
        std::iota(rest.begin(), rest.end(), 2);
        do {
            std::vector<Letter> v{1};
            v.insert(v.end(), rest.begin(), rest.end());
            const Cycle c(v);
            const auto a = cycle_stats(c);
            const auto b = cycle_stats(reversal(c));
            if (k >= 2) {
                REQUIRE(b.cdes == a.casc);
            }
            REQUIRE(a.cdes + a.casc == k);
            REQUIRE(a.weight == b.weight);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
}

TEST_CASE("canonical cycle form is idempotent and ignores rotations")
{
    std::uniform_int_distribution<int> size(1, 14);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto p = to_cycles(random_permutation(size(rng())));
        std::vector<std::vector<Letter>> rotated;
        for (const auto& c : p) {
            auto v = c.vec();
            std::uniform_int_distribution<std::size_t> shift(0, v.size() - 1);
            std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift(rng())), v.end());
            rotated.push_back(std::move(v));
        }
        std::shuffle(rotated.begin(), rotated.end(), rng());
        REQUIRE(canonicalize_cycles(rotated) == p);
        REQUIRE(canonicalize_cycles(p.cycles()) == p);
        REQUIRE(parse_cycles(format_cycles(p)) == p);
        REQUIRE(perm_weight(reversal(p)) == perm_weight(p));
    }
}

TEST_CASE("linear shift on random ballot permutations beyond the exhaustive range")
{
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 10 + trial % 4;
        const auto p = random_ballot(n);
        const auto at = std::find(p.begin(), p.end(), n) - p.begin();
        if (at == 0 || at == n - 1) {
            continue;
        }
        const Letter i = p[static_cast<std::size_t>(at - 1)];
        const Letter j = p[static_cast<std::size_t>(at + 1)];
        if (i > n - 2 || j > n - 2) {
            continue;
        }
        const auto s = diagonal_shift(p, i, j);
        INFO(format_word(p) << " i=" << i << " j=" << j);
        REQUIRE(is_ballot(s));
        REQUIRE(contains_factor(s, Word{i + 1, n, j + 1}));
        REQUIRE(descents(s) == descents(p));
        REQUIRE(diagonal_unshift(s, i, j) == p);
        REQUIRE(upper_core_data(s, i, j).width == lower_core_data(p, i, j).width);
    }
}

TEST_CASE("cyclic shift on random odd-order permutations beyond the exhaustive range")
{
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 11 + trial % 4;
        const auto p = random_odd_order(n);
        const auto& c = p[p.cycle_of(n)];
        if (c.size() < 3) {
            continue;
        }
        const auto at = static_cast<std::ptrdiff_t>(std::find(c.begin(), c.end(), n) - c.begin());
        const Letter i = c.at_cyclic(at - 1);
        const Letter j = c.at_cyclic(at + 1);
        if (i > n - 2 || j > n - 2) {
            continue;
        }
        const auto s = diagonal_shift(p, i, j);
        INFO(format_cycles(p) << " i=" << i << " j=" << j);
        REQUIRE(is_odd_order(s));
        REQUIRE(contains_cyclic_factor(s, Word{i + 1, n, j + 1}));
        REQUIRE(perm_weight(s) == perm_weight(p));
        REQUIRE(diagonal_unshift(s, i, j) == p);
    }
}

TEST_CASE("f and g invert each other on random decomposable permutations")
{
    int seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 9 + trial % 4;
        const auto p = random_ballot(n);
        for (Letter i = 1; i + 2 <= n - 1; ++i) {
            for (Letter j = i + 2; j <= n - 1; ++j) {
                const ShiftWords sw(i, j, n);
                if (!omega_decompose(p, sw.lambda())) {
                    continue;
                }
                ++seen;
                const auto q = shift_fg(p, sw, Direction::forward);
                REQUIRE(is_ballot(q));
                REQUIRE(omega_decompose(q, sw.mu()).has_value());
                REQUIRE(shift_fg(q, sw, Direction::backward) == p);
            }
        }
    }
    CHECK(seen > 0);
}
