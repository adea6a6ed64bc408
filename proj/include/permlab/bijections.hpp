#pragma once

// Maps between classes of ballot and odd-order permutations that are defined
// by what surrounds the largest letter n.

#include "permlab/codec.hpp"
#include "permlab/cycles.hpp"
#include "permlab/word.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace permlab {

namespace detail {

inline Word slice(Letters w, std::size_t first, std::size_t count)
{
    return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(first),
                                    w.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

inline std::vector<Letter> reversed(Letters w) { return {w.rbegin(), w.rend()}; }

} // namespace detail

/// pi = alpha omega gamma delta with h(alpha omega gamma) = h(omega), the
/// reversal of gamma followed by the last letter of omega ballot, and gamma
/// as long as possible under both conditions.
struct OmegaDecomposition {
    Word alpha;
    Word omega;
    Word gamma;
    Word delta;

    /// Last letter of gamma, or of omega when gamma is empty.
    [[nodiscard]] Letter gamma_last() const { return gamma.empty() ? omega.back() : gamma.back(); }

    [[nodiscard]] OneLinePermutation joined() const
    {
        return OneLinePermutation(concat({alpha, omega, gamma, delta}).vec());
    }

    friend bool operator==(const OmegaDecomposition&, const OmegaDecomposition&) = default;
};

/// The omega-decomposition of a ballot permutation, or nothing when `p` is not
/// ballot, does not contain `omega`, or admits no gamma with h(alpha omega gamma) = h(omega).
/// When `omega` occurs more than once (impossible for the four-letter shift
/// words) the leftmost occurrence is used.
inline std::optional<OmegaDecomposition> omega_decompose(const OneLinePermutation& p, const Word& omega)
{
    if (omega.empty()) {
        throw DomainError("omega_decompose: omega must be nonempty");
    }
    if (!is_ballot(omega)) {
        throw DomainError("omega_decompose: omega is not ballot");
    }
    if (!is_ballot(p)) {
        return std::nullopt;
    }
    const Letters w = p;
    const auto start = detail::find_factor(w, omega, false);
    if (!start) {
        return std::nullopt;
    }
    const std::size_t after = *start + omega.size();
    const int target = height(omega);
    std::vector<Letter> probe;
    for (std::size_t len = w.size() - after + 1; len-- > 0;) {
        if (height(w.first(after + len)) != target) {
            continue;
        }
        probe.assign(w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - after - len),
                     w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - after));
        probe.push_back(omega.back());
        if (!is_ballot(probe)) {
            continue;
        }
        return OmegaDecomposition{detail::slice(w, 0, *start), omega, detail::slice(w, after, len),
                                  detail::slice(w, after + len, w.size() - after - len)};
    }
    return std::nullopt;
}

/// The pair lambda = i n (j-1) j and mu = (j-1) j n i, for i + 2 <= j <= n - 1.
class ShiftWords {
public:
    ShiftWords(Letter i, Letter j, int n) : i_(i), j_(j), n_(n)
    {
        if (i < 1 || i + 2 > j || j > n - 1) {
            throw DomainError("ShiftWords: need 1 <= i, i+2 <= j <= n-1; got i=" + std::to_string(i)
                              + " j=" + std::to_string(j) + " n=" + std::to_string(n));
        }
    }

    [[nodiscard]] Letter i() const noexcept { return i_; }
    [[nodiscard]] Letter j() const noexcept { return j_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Word lambda() const { return Word{i_, n_, j_ - 1, j_}; }
    [[nodiscard]] Word mu() const { return Word{j_ - 1, j_, n_, i_}; }

private:
    Letter i_;
    Letter j_;
    int n_;
};

enum class Direction { forward, backward };

/// forward: (alpha, lambda, gamma, delta) -> gamma' mu alpha' delta;
/// backward: (alpha, mu, gamma, delta) -> gamma' lambda alpha' delta.
inline OneLinePermutation shift_fg(const OneLinePermutation& p, const ShiftWords& sw, Direction dir)
{
    if (p.n() != sw.n()) {
        throw DomainError("shift_fg: permutation length differs from n of the shift words");
    }
    const Word source = dir == Direction::forward ? sw.lambda() : sw.mu();
    const Word target = dir == Direction::forward ? sw.mu() : sw.lambda();
    const auto parts = omega_decompose(p, source);
    if (!parts) {
        throw DomainError(std::string("shift_fg: permutation is not in X_n(") + (dir == Direction::forward ? "lambda" : "mu")
                          + ") " + format_word(p));
    }
    std::vector<Letter> out = detail::reversed(parts->gamma);
    out.insert(out.end(), target.begin(), target.end());
    const auto alpha_rev = detail::reversed(parts->alpha);
    out.insert(out.end(), alpha_rev.begin(), alpha_rev.end());
    out.insert(out.end(), parts->delta.begin(), parts->delta.end());
    return OneLinePermutation(std::move(out));
}

/// Exchanges the letters j-1 and j of a ballot permutation holding i n (j-1)
/// that is not lambda-decomposable.
inline OneLinePermutation phi_exchange(const OneLinePermutation& p, Letter i, Letter j)
{
    const ShiftWords sw(i, j, p.n());
    if (!is_ballot(p)) {
        throw DomainError("phi_exchange: permutation is not ballot");
    }
    const Word core{i, p.n(), j - 1};
    if (!contains_factor(p, core)) {
        throw DomainError("phi_exchange: permutation lacks the factor i n (j-1)");
    }
    if (omega_decompose(p, sw.lambda())) {
        throw DomainError("phi_exchange: permutation lies in X_n(lambda)");
    }
    std::vector<Letter> out = p.vec();
    for (auto& x : out) {
        if (x == j - 1) {
            x = j;
        } else if (x == j) {
            x = j - 1;
        }
    }
    return OneLinePermutation(std::move(out));
}

namespace detail {

inline void require_adjacent_pair(Letter i, Letter j, int n)
{
    if (i < 1 || j < 1 || i > n - 1 || j > n - 1 || (i - j != 1 && j - i != 1)) {
        throw DomainError("adjacent-pair contraction: need |i-j| = 1 with i, j in [n-1]; got i="
                          + std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
}

/// Drops j and n, then closes the gap left by j.
inline Letter contract_letter(Letter x, Letter j) { return x > j ? x - 1 : x; }
inline Letter expand_letter(Letter x, Letter j) { return x >= j ? x + 1 : x; }

} // namespace detail

/// Removes the letters j and n from a permutation holding the factor i n j
/// (|i - j| = 1) and standardizes what is left. Descent number drops by one
/// and ballotness is kept.
inline OneLinePermutation contract_adjacent_pair(const OneLinePermutation& p, Letter i, Letter j)
{
    const int n = p.n();
    detail::require_adjacent_pair(i, j, n);
    const Word core{i, n, j};
    if (!contains_factor(p, core)) {
        throw DomainError("contract_adjacent_pair: permutation lacks the factor i n j");
    }
    std::vector<Letter> out;
    for (Letter x : p) {
        if (x != j && x != n) {
            out.push_back(detail::contract_letter(x, j));
        }
    }
    return OneLinePermutation(std::move(out));
}

/// Inverse of contract_adjacent_pair on a permutation of length n - 2.
inline OneLinePermutation expand_adjacent_pair(const OneLinePermutation& q, Letter i, Letter j)
{
    const int n = q.n() + 2;
    detail::require_adjacent_pair(i, j, n);
    std::vector<Letter> out;
    for (Letter x : q) {
        const Letter y = detail::expand_letter(x, j);
        out.push_back(y);
        if (y == i) {
            out.push_back(n);
            out.push_back(j);
        }
    }
    return OneLinePermutation(std::move(out));
}

/// Cycle version: removes j and n from the cycle holding the cyclic factor
/// i n j. Cyclic weight drops by one, cycle count and parity of lengths are kept.
inline CycleDecomposition contract_adjacent_pair(const CycleDecomposition& p, Letter i, Letter j)
{
    const int n = p.n();
    detail::require_adjacent_pair(i, j, n);
    const Word core{i, n, j};
    if (!contains_cyclic_factor(p, core)) {
        throw DomainError("contract_adjacent_pair: permutation lacks the cyclic factor i n j");
    }
    std::vector<std::vector<Letter>> raw;
    for (const auto& c : p) {
        std::vector<Letter> kept;
        for (Letter x : c) {
            if (x != j && x != n) {
                kept.push_back(detail::contract_letter(x, j));
            }
        }
        raw.push_back(std::move(kept));
    }
    return canonicalize_cycles(std::move(raw));
}

inline CycleDecomposition expand_adjacent_pair(const CycleDecomposition& q, Letter i, Letter j)
{
    const int n = q.n() + 2;
    detail::require_adjacent_pair(i, j, n);
    std::vector<std::vector<Letter>> raw;
    for (const auto& c : q) {
        std::vector<Letter> grown;
        for (Letter x : c) {
            const Letter y = detail::expand_letter(x, j);
            grown.push_back(y);
            if (y == i) {
                grown.push_back(n);
                grown.push_back(j);
            }
        }
        raw.push_back(std::move(grown));
    }
    return canonicalize_cycles(std::move(raw));
}

/// Involution between odd-order permutations holding the cyclic factor 1 n 2
/// and those holding 1 n 3. A cycle (1 n 2 3 alpha) becomes (1 n 3 2 alpha')
/// and vice versa; when 2 and 3 are not adjacent the letters 2 and 3 are exchanged.
/// Cyclic weight and cycle lengths are preserved.
inline CycleDecomposition flip_two_three(const CycleDecomposition& p)
{
    const int n = p.n();
    if (n < 4) {
        throw DomainError("flip_two_three: need n >= 4");
    }
    const auto& c = p[p.cycle_of(1)];
    const auto succ = [&](Letter x) {
        const auto& v = c.vec();
        const auto pos = static_cast<std::ptrdiff_t>(std::find(v.begin(), v.end(), x) - v.begin());
        return c.at_cyclic(pos + 1);
    };
    if (c.size() < 3 || succ(1) != n || (succ(n) != 2 && succ(n) != 3)) {
        throw DomainError("flip_two_three: no cyclic factor 1 n 2 or 1 n 3");
    }
    const Letter x = succ(n);
    const Letter y = x == 2 ? 3 : 2;
    std::vector<std::vector<Letter>> raw;
    if (c.size() >= 4 && succ(x) == y) {
        for (const auto& other : p) {
            if (&other != &c) {
                raw.push_back(other.vec());
            }
        }
        // c is min-first, so it reads 1 n x y alpha.
        std::vector<Letter> flipped{1, n, y, x};
        flipped.insert(flipped.end(), c.vec().rbegin(), c.vec().rend() - 4);
        raw.push_back(std::move(flipped));
    } else {
        for (const auto& other : p) {
            std::vector<Letter> v = other.vec();
            for (auto& z : v) {
                z = z == 2 ? 3 : (z == 3 ? 2 : z);
            }
            raw.push_back(std::move(v));
        }
    }
    return canonicalize_cycles(std::move(raw));
}

} // namespace permlab
