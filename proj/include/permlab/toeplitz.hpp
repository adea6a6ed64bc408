#pragma once

// The diagonal shift between permutations holding the factor i n j and those
// holding (i+1) n (j+1). It preserves descent number (one-line form) and every
// cycle's length and cyclic descent number (cycle form), which is what makes
// the count matrices constant along diagonals.
//
// Notation, with m = min(i,j) and M = max(i,j):
//   bar(x)      = M+1 if x == M, else x
//   underbar(x) = m   if x == m+1, else x
//   lower run of width l: bar(m) bar(m+1) ... bar(m+l-1), anchored at m
//   upper run of width l: underbar(M+1) underbar(M) ... underbar(M-l+2), anchored at M+1
// The lower core is the lower run (read toward n) together with n and the
// other neighbour of n; the upper core is defined the same way from the upper run.
// A shift replaces one core by the other at the same place, then relabels the
// displaced letters of [m, M+1] in order-preserving fashion.

#include "permlab/cycles.hpp"
#include "permlab/word.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace permlab {

struct CorePosition {
    /// Cycle index within the decomposition; empty for one-line form.
    std::optional<std::size_t> cycle;
    /// 0-based start of the core (in the min-first cycle word for cycle form; may wrap).
    std::size_t offset = 0;

    friend bool operator==(const CorePosition&, const CorePosition&) = default;
};

struct CoreData {
    Letter m = 0;
    Letter M = 0;
    int width = 0;
    Word core;
    CorePosition position;

    [[nodiscard]] Letter bar(Letter x) const noexcept { return x == M ? M + 1 : x; }
    [[nodiscard]] Letter underbar(Letter x) const noexcept { return x == m + 1 ? m : x; }
};

namespace detail {

/// A word read either as a line or as a ring.
struct Host {
    Letters w;
    bool ring;

    [[nodiscard]] std::optional<Letter> at(std::ptrdiff_t k) const
    {
        const auto len = static_cast<std::ptrdiff_t>(w.size());
        if (ring) {
            return w[static_cast<std::size_t>(((k % len) + len) % len)];
        }
        if (k < 0 || k >= len) {
            return std::nullopt;
        }
        return w[static_cast<std::size_t>(k)];
    }

    [[nodiscard]] std::ptrdiff_t index_of(Letter x) const
    {
        const auto it = std::find(w.begin(), w.end(), x);
        return it == w.end() ? -1 : static_cast<std::ptrdiff_t>(it - w.begin());
    }

    [[nodiscard]] bool adjacent(Letter x, Letter y) const
    {
        const auto px = index_of(x);
        if (px < 0) {
            return false;
        }
        return at(px - 1) == y || at(px + 1) == y;
    }

    [[nodiscard]] std::size_t wrap(std::ptrdiff_t k) const
    {
        const auto len = static_cast<std::ptrdiff_t>(w.size());
        return static_cast<std::size_t>(((k % len) + len) % len);
    }
};

/// Length of the run letter(0), letter(1), ... read from `anchor` in direction `step`.
template <class LetterAt>
int run_length(const Host& host, std::ptrdiff_t anchor, int step, int cap, LetterAt letter)
{
    int k = 0;
    while (k < cap && k < static_cast<int>(host.w.size())) {
        const auto x = host.at(anchor + step * k);
        if (!x || *x != letter(k)) {
            break;
        }
        ++k;
    }
    return k;
}

inline void require_shift_pair(Letter i, Letter j, int n)
{
    if (i < 1 || j < 1 || i > n - 2 || j > n - 2 || i == j) {
        throw DomainError("diagonal shift: need 1 <= i != j <= n-2; got i=" + std::to_string(i)
                          + " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
}

/// Lower core of `host` for the pair (i, j); n sits between i and j.
inline CoreData lower_core(const Host& host, Letter i, Letter j, int n)
{
    CoreData cd;
    cd.m = std::min(i, j);
    cd.M = std::max(i, j);
    const int cap = cd.M - cd.m + 1;
    const auto pm = host.index_of(cd.m);
    if (!host.adjacent(cd.M, cd.M + 1)) {
        const auto bar_run = [&](int k) { return cd.bar(cd.m + k); };
        cd.width = std::max(run_length(host, pm, -1, cap, bar_run), run_length(host, pm, +1, cap, bar_run));
    }
    const auto l = static_cast<std::ptrdiff_t>(cd.width);
    std::vector<Letter> core;
    std::ptrdiff_t start = 0;
    if (i < j) {
        for (auto k = l - 1; k >= 0; --k) {
            core.push_back(cd.bar(cd.m + static_cast<Letter>(k)));
        }
        core.push_back(n);
        core.push_back(j);
        start = pm - l + 1;
    } else {
        core.push_back(i);
        core.push_back(n);
        for (std::ptrdiff_t k = 0; k < l; ++k) {
            core.push_back(cd.bar(cd.m + static_cast<Letter>(k)));
        }
        start = pm - 2;
    }
    cd.core = Word(std::move(core));
    cd.position.offset = host.ring ? host.wrap(start) : static_cast<std::size_t>(start);
    return cd;
}

/// Upper core of `host` for the pair (i, j); n sits between i+1 and j+1.
inline CoreData upper_core(const Host& host, Letter i, Letter j, int n)
{
    CoreData cd;
    cd.m = std::min(i, j);
    cd.M = std::max(i, j);
    const int cap = cd.M - cd.m + 1;
    const auto top = host.index_of(cd.M + 1);
    if (!host.adjacent(cd.m, cd.m + 1)) {
        const auto underbar_run = [&](int k) { return cd.underbar(cd.M + 1 - k); };
        cd.width = std::max(run_length(host, top, +1, cap, underbar_run),
                            run_length(host, top, -1, cap, underbar_run));
    }
    const auto l = static_cast<std::ptrdiff_t>(cd.width);
    std::vector<Letter> core;
    std::ptrdiff_t start = 0;
    if (i < j) {
        core.push_back(i + 1);
        core.push_back(n);
        for (std::ptrdiff_t k = 0; k < l; ++k) {
            core.push_back(cd.underbar(cd.M + 1 - static_cast<Letter>(k)));
        }
        start = top - 2;
    } else {
        for (auto k = l - 1; k >= 0; --k) {
            core.push_back(cd.underbar(cd.M + 1 - static_cast<Letter>(k)));
        }
        core.push_back(n);
        core.push_back(j + 1);
        start = top - l + 1;
    }
    cd.core = Word(std::move(core));
    cd.position.offset = host.ring ? host.wrap(start) : static_cast<std::size_t>(start);
    return cd;
}

/// Word that replaces the lower core under the forward shift.
inline std::vector<Letter> lower_core_image(const CoreData& cd, Letter i, Letter j, int n)
{
    std::vector<Letter> out;
    if (i < j) {
        out.push_back(i + 1);
        out.push_back(n);
        for (int k = 0; k < cd.width; ++k) {
            out.push_back(cd.underbar(cd.M + 1 - k));
        }
    } else {
        for (int k = cd.width - 1; k >= 0; --k) {
            out.push_back(cd.underbar(cd.M + 1 - k));
        }
        out.push_back(n);
        out.push_back(j + 1);
    }
    return out;
}

/// Word that replaces the upper core under the backward shift.
inline std::vector<Letter> upper_core_image(const CoreData& cd, Letter i, Letter j, int n)
{
    std::vector<Letter> out;
    if (i < j) {
        for (int k = cd.width - 1; k >= 0; --k) {
            out.push_back(cd.bar(cd.m + k));
        }
        out.push_back(n);
        out.push_back(j);
    } else {
        out.push_back(i);
        out.push_back(n);
        for (int k = 0; k < cd.width; ++k) {
            out.push_back(cd.bar(cd.m + k));
        }
    }
    return out;
}

/// Order-preserving bijection [m, M+1] \ from_core  ->  [m, M+1] \ to_core.
class Straightening {
public:
    Straightening(Letter m, Letter M, Letters from_core, Letters to_core) : m_(m), image_(M - m + 2, 0)
    {
        const auto outside = [&](Letters core) {
            std::vector<Letter> rest;
            for (Letter x = m; x <= M + 1; ++x) {
                if (std::find(core.begin(), core.end(), x) == core.end()) {
                    rest.push_back(x);
                }
            }
            return rest;
        };
        const auto from = outside(from_core);
        const auto to = outside(to_core);
        if (from.size() != to.size()) {
            throw DomainError("straightening: core letter sets have different sizes");
        }
        for (std::size_t k = 0; k < from.size(); ++k) {
            image_[static_cast<std::size_t>(from[k] - m)] = to[k];
        }
    }

    [[nodiscard]] Letter operator()(Letter x) const
    {
        if (x < m_ || x >= m_ + static_cast<Letter>(image_.size())) {
            return x;
        }
        const Letter y = image_[static_cast<std::size_t>(x - m_)];
        if (y == 0) {
            throw DomainError("straightening: letter " + std::to_string(x) + " belongs to the core");
        }
        return y;
    }

private:
    Letter m_;
    std::vector<Letter> image_;
};

/// Writes `replacement` over the core and straightens every other letter of `host`.
inline std::vector<Letter> rewrite(const Host& host, const CoreData& cd, Letters replacement,
                                   const Straightening& straighten)
{
    std::vector<Letter> out(host.w.begin(), host.w.end());
    std::vector<char> in_core(out.size(), 0);
    for (std::size_t k = 0; k < replacement.size(); ++k) {
        const auto pos = host.wrap(static_cast<std::ptrdiff_t>(cd.position.offset + k));
        out[pos] = replacement[k];
        in_core[pos] = 1;
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!in_core[k]) {
            out[k] = straighten(out[k]);
        }
    }
    return out;
}

inline std::size_t require_cyclic_factor(const CycleDecomposition& p, Letter a, Letter b, const char* who)
{
    const Word f{a, p.n(), b};
    const auto loc = find_cyclic_factor(p, f);
    if (!loc) {
        throw DomainError(std::string(who) + ": missing cyclic factor " + std::to_string(a) + " n "
                          + std::to_string(b));
    }
    return loc->cycle;
}

inline void require_factor(const OneLinePermutation& p, Letter a, Letter b, const char* who)
{
    if (!contains_factor(p, Word{a, p.n(), b})) {
        throw DomainError(std::string(who) + ": missing factor " + std::to_string(a) + " n " + std::to_string(b));
    }
}

} // namespace detail

/// Lower width and core of a permutation holding the factor i n j.
inline CoreData lower_core_data(const OneLinePermutation& p, Letter i, Letter j)
{
    detail::require_shift_pair(i, j, p.n());
    detail::require_factor(p, i, j, "lower_core_data");
    return detail::lower_core(detail::Host{p, false}, i, j, p.n());
}

/// Cycle form: width and core are taken inside the cycle holding n.
inline CoreData lower_core_data(const CycleDecomposition& p, Letter i, Letter j)
{
    detail::require_shift_pair(i, j, p.n());
    const auto cyc = detail::require_cyclic_factor(p, i, j, "lower_core_data");
    auto cd = detail::lower_core(detail::Host{p[cyc], true}, i, j, p.n());
    cd.position.cycle = cyc;
    return cd;
}

/// Upper width and core of a permutation holding the factor (i+1) n (j+1).
inline CoreData upper_core_data(const OneLinePermutation& s, Letter i, Letter j)
{
    detail::require_shift_pair(i, j, s.n());
    detail::require_factor(s, i + 1, j + 1, "upper_core_data");
    return detail::upper_core(detail::Host{s, false}, i, j, s.n());
}

inline CoreData upper_core_data(const CycleDecomposition& s, Letter i, Letter j)
{
    detail::require_shift_pair(i, j, s.n());
    const auto cyc = detail::require_cyclic_factor(s, i + 1, j + 1, "upper_core_data");
    auto cd = detail::upper_core(detail::Host{s[cyc], true}, i, j, s.n());
    cd.position.cycle = cyc;
    return cd;
}

/// Ballot permutations with d descents holding i n j  ->  same class holding (i+1) n (j+1).
inline OneLinePermutation diagonal_shift(const OneLinePermutation& p, Letter i, Letter j)
{
    if (!is_ballot(p)) {
        throw DomainError("diagonal_shift: permutation is not ballot");
    }
    const auto cd = lower_core_data(p, i, j);
    const auto image = detail::lower_core_image(cd, i, j, p.n());
    const detail::Straightening straighten(cd.m, cd.M, cd.core, image);
    return OneLinePermutation(detail::rewrite(detail::Host{p, false}, cd, image, straighten));
}

/// Inverse of diagonal_shift.
inline OneLinePermutation diagonal_unshift(const OneLinePermutation& s, Letter i, Letter j)
{
    if (!is_ballot(s)) {
        throw DomainError("diagonal_unshift: permutation is not ballot");
    }
    const auto cd = upper_core_data(s, i, j);
    const auto image = detail::upper_core_image(cd, i, j, s.n());
    const detail::Straightening straighten(cd.m, cd.M, cd.core, image);
    return OneLinePermutation(detail::rewrite(detail::Host{s, false}, cd, image, straighten));
}

namespace detail {

inline CycleDecomposition rewrite_cycles(const CycleDecomposition& p, const CoreData& cd, Letters image)
{
    const Straightening straighten(cd.m, cd.M, cd.core, image);
    std::vector<std::vector<Letter>> raw;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k == *cd.position.cycle) {
            raw.push_back(rewrite(Host{p[k], true}, cd, image, straighten));
        } else {
            std::vector<Letter> c;
            for (Letter x : p[k]) {
                c.push_back(straighten(x));
            }
            raw.push_back(std::move(c));
        }
    }
    return canonicalize_cycles(std::move(raw));
}

} // namespace detail

/// Odd-order permutations with cyclic weight d holding the cyclic factor i n j
/// ->  same class holding (i+1) n (j+1). Output is canonical.
inline CycleDecomposition diagonal_shift(const CycleDecomposition& p, Letter i, Letter j)
{
    if (!is_odd_order(p)) {
        throw DomainError("diagonal_shift: permutation is not of odd order");
    }
    const auto cd = lower_core_data(p, i, j);
    return detail::rewrite_cycles(p, cd, detail::lower_core_image(cd, i, j, p.n()));
}

inline CycleDecomposition diagonal_unshift(const CycleDecomposition& s, Letter i, Letter j)
{
    if (!is_odd_order(s)) {
        throw DomainError("diagonal_unshift: permutation is not of odd order");
    }
    const auto cd = upper_core_data(s, i, j);
    return detail::rewrite_cycles(s, cd, detail::upper_core_image(cd, i, j, s.n()));
}

} // namespace permlab
