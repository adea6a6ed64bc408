#pragma once

#include "permlab/cycles.hpp"
#include "permlab/word.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

enum class Kind { ballot, odd };

inline std::string_view to_string(Kind k) noexcept { return k == Kind::ballot ? "ballot" : "odd"; }

inline Kind parse_kind(std::string_view s)
{
    if (s == "ballot") {
        return Kind::ballot;
    }
    if (s == "odd") {
        return Kind::odd;
    }
    throw DomainError("unknown kind \"" + std::string(s) + "\" (expected ballot|odd)");
}

/// Largest n each exhaustive traversal may be asked for. Ballot traversals at
/// n = 10 visit about a million permutations; odd-order ones at n = 11 about ten million.
struct Budget {
    int max_ballot_n = 10;
    int max_odd_n = 11;

    [[nodiscard]] int limit(Kind k) const noexcept { return k == Kind::ballot ? max_ballot_n : max_odd_n; }

    static Budget at_least(int n) noexcept { return Budget{std::max(10, n), std::max(11, n)}; }
};

inline void require_within_budget(Kind kind, int n, const Budget& budget)
{
    if (n > budget.limit(kind)) {
        throw BudgetError("exhaustive " + std::string(to_string(kind)) + " traversal at n=" + std::to_string(n)
                          + " exceeds budget n<=" + std::to_string(budget.limit(kind)));
    }
}

/// Calls `visit(Letters)` for each ballot permutation of {1..n}, in
/// lexicographic order. Prefixes of negative height are pruned.
template <class Visitor>
void for_each_ballot(int n, Visitor&& visit)
{
    if (n < 1) {
        throw DomainError("for_each_ballot: n must be >= 1");
    }
    const auto len = static_cast<std::size_t>(n);
    std::vector<Letter> word(len);
    std::vector<char> used(len + 1, 0);
    auto extend = [&](auto& self, std::size_t pos, int h) -> void {
        if (pos == len) {
            visit(Letters(word));
            return;
        }
        for (Letter x = 1; x <= n; ++x) {
            if (used[static_cast<std::size_t>(x)]) {
                continue;
            }
            int next = h;
            if (pos > 0) {
                next += word[pos - 1] < x ? 1 : -1;
                if (next < 0) {
                    continue;
                }
            }
            used[static_cast<std::size_t>(x)] = 1;
            word[pos] = x;
            self(self, pos + 1, next);
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    extend(extend, 0, 0);
}

inline std::vector<OneLinePermutation> enumerate_ballot(int n, const Budget& budget = {})
{
    require_within_budget(Kind::ballot, n, budget);
    std::vector<OneLinePermutation> out;
    for_each_ballot(n, [&](Letters w) { out.emplace_back(std::vector<Letter>(w.begin(), w.end())); });
    return out;
}

/// Flat view of a canonical cycle decomposition produced during traversal:
/// cycle k occupies letters[ends[k-1] .. ends[k]).
struct CycleListView {
    Letters letters;
    std::span<const std::size_t> ends;

    [[nodiscard]] std::size_t cycle_count() const noexcept { return ends.size(); }
    [[nodiscard]] Letters cycle(std::size_t k) const noexcept
    {
        const std::size_t first = k == 0 ? 0 : ends[k - 1];
        return letters.subspan(first, ends[k] - first);
    }

    [[nodiscard]] CycleDecomposition to_decomposition() const
    {
        std::vector<std::vector<Letter>> raw;
        raw.reserve(cycle_count());
        for (std::size_t k = 0; k < cycle_count(); ++k) {
            auto c = cycle(k);
            raw.emplace_back(c.begin(), c.end());
        }
        return canonicalize_cycles(std::move(raw));
    }
};

/// Calls `visit(CycleListView)` for every permutation of {1..n} whose cycles
/// all have odd length. Cycles are built min-first from the smallest unused
/// letter and closed only at odd length, so the output is canonical and
/// arrives in lexicographic order of the cycle lists.
template <class Visitor>
void for_each_odd_order(int n, Visitor&& visit)
{
    if (n < 1) {
        throw DomainError("for_each_odd_order: n must be >= 1");
    }
    const auto len = static_cast<std::size_t>(n);
    std::vector<Letter> letters;
    letters.reserve(len);
    std::vector<std::size_t> ends;
    ends.reserve(len);
    std::vector<char> used(len + 1, 0);

    auto open_cycle = [&](auto& self_open, auto& self_grow) -> void {
        if (letters.size() == len) {
            visit(CycleListView{Letters(letters), std::span<const std::size_t>(ends)});
            return;
        }
        Letter first = 1;
        while (used[static_cast<std::size_t>(first)]) {
            ++first;
        }
        used[static_cast<std::size_t>(first)] = 1;
        letters.push_back(first);
        self_grow(self_open, self_grow, first, std::size_t{1});
        letters.pop_back();
        used[static_cast<std::size_t>(first)] = 0;
    };
    auto grow = [&](auto& self_open, auto& self_grow, Letter first, std::size_t cycle_len) -> void {
        if (cycle_len % 2 == 1) {
            ends.push_back(letters.size());
            self_open(self_open, self_grow);
            ends.pop_back();
        }
        for (Letter x = first + 1; x <= n; ++x) {
            if (used[static_cast<std::size_t>(x)]) {
                continue;
            }
            used[static_cast<std::size_t>(x)] = 1;
            letters.push_back(x);
            self_grow(self_open, self_grow, first, cycle_len + 1);
            letters.pop_back();
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    open_cycle(open_cycle, grow);
}

inline std::vector<CycleDecomposition> enumerate_odd_order(int n, const Budget& budget = {})
{
    require_within_budget(Kind::odd, n, budget);
    std::vector<CycleDecomposition> out;
    for_each_odd_order(n, [&](const CycleListView& v) { out.push_back(v.to_decomposition()); });
    return out;
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw DomainError("closed-form count overflows 64 bits");
    }
    return r;
}

} // namespace detail

/// n!! with (-1)!! = 0!! = 1.
inline std::uint64_t double_factorial(int n)
{
    std::uint64_t r = 1;
    for (int k = n; k > 1; k -= 2) {
        r = detail::checked_mul(r, static_cast<std::uint64_t>(k));
    }
    return r;
}

/// Number of ballot permutations of length n: (n-1)!!^2 for even n, n!! (n-2)!! for odd n.
inline std::uint64_t ballot_count_closed(int n)
{
    if (n < 1) {
        throw DomainError("ballot_count_closed: n must be >= 1");
    }
    if (n % 2 == 0) {
        const auto f = double_factorial(n - 1);
        return detail::checked_mul(f, f);
    }
    return detail::checked_mul(double_factorial(n), double_factorial(n - 2));
}

} // namespace permlab
