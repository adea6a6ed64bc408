#pragma once

#include "permlab/word.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

/// A cycle stored with its minimum letter first.
class Cycle {
public:
    explicit Cycle(std::vector<Letter> letters)
    {
        if (letters.empty()) {
            throw DomainError("Cycle: empty cycle");
        }
        std::rotate(letters.begin(), std::min_element(letters.begin(), letters.end()), letters.end());
        word_ = Word(std::move(letters));
    }
    Cycle(std::initializer_list<Letter> letters) : Cycle(std::vector<Letter>(letters)) {}

    [[nodiscard]] const Word& word() const noexcept { return word_; }
    [[nodiscard]] Letters letters() const noexcept { return word_.letters(); }
    [[nodiscard]] const std::vector<Letter>& vec() const noexcept { return word_.vec(); }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }
    [[nodiscard]] Letter operator[](std::size_t k) const { return word_[k]; }
    [[nodiscard]] Letter min() const { return word_.front(); }
    [[nodiscard]] auto begin() const noexcept { return word_.begin(); }
    [[nodiscard]] auto end() const noexcept { return word_.end(); }

    /// Letter at cyclic offset `k` (any integer).
    [[nodiscard]] Letter at_cyclic(std::ptrdiff_t k) const
    {
        const auto len = static_cast<std::ptrdiff_t>(size());
        return word_[static_cast<std::size_t>(((k % len) + len) % len)];
    }

    operator Letters() const noexcept { return word_.letters(); }

    friend auto operator<=>(const Cycle&, const Cycle&) = default;
    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    Word word_;
};

struct CycleStats {
    int cdes = 0;
    int casc = 0;
    int weight = 0;

    friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

/// Cyclic descents over a cyclic word, wrap-around pair included.
inline int cyclic_descents(Letters c) noexcept
{
    int cdes = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] > c[(k + 1) % c.size()]) {
            ++cdes;
        }
    }
    return cdes;
}

inline CycleStats cycle_stats(Letters c) noexcept
{
    CycleStats s;
    s.cdes = cyclic_descents(c);
    s.casc = static_cast<int>(c.size()) - s.cdes;
    s.weight = std::min(s.cdes, s.casc);
    return s;
}

inline Cycle reversal(const Cycle& c)
{
    return Cycle(std::vector<Letter>(c.vec().rbegin(), c.vec().rend()));
}

/// A permutation of {1, ..., n} as a list of cycles, each min-first, sorted by minimum.
class CycleDecomposition {
public:
    CycleDecomposition() = default;

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    [[nodiscard]] std::size_t size() const noexcept { return cycles_.size(); }
    [[nodiscard]] auto begin() const noexcept { return cycles_.begin(); }
    [[nodiscard]] auto end() const noexcept { return cycles_.end(); }
    [[nodiscard]] const Cycle& operator[](std::size_t k) const { return cycles_[k]; }

    /// Index of the cycle holding `x`.
    [[nodiscard]] std::size_t cycle_of(Letter x) const
    {
        for (std::size_t k = 0; k < cycles_.size(); ++k) {
            const auto& v = cycles_[k].vec();
            if (std::find(v.begin(), v.end(), x) != v.end()) {
                return k;
            }
        }
        throw DomainError("CycleDecomposition: letter " + std::to_string(x) + " not present");
    }

    friend auto operator<=>(const CycleDecomposition&, const CycleDecomposition&) = default;
    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

private:
    friend CycleDecomposition canonicalize_cycles(std::vector<std::vector<Letter>> raw);

    std::vector<Cycle> cycles_;
    int n_ = 0;
};

/// Builds the canonical form from cycles given in any rotation and order.
/// The cycles' letter sets must partition {1, ..., n}.
inline CycleDecomposition canonicalize_cycles(std::vector<std::vector<Letter>> raw)
{
    CycleDecomposition out;
    std::size_t total = 0;
    Letter largest = 0;
    for (auto& c : raw) {
        total += c.size();
        for (Letter x : c) {
            largest = std::max(largest, x);
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(largest) + 1, false);
    for (auto& c : raw) {
        for (Letter x : c) {
            if (x < 1) {
                throw DomainError("canonicalize_cycles: nonpositive letter " + std::to_string(x));
            }
            if (seen[static_cast<std::size_t>(x)]) {
                throw DomainError("canonicalize_cycles: letter " + std::to_string(x) + " appears twice");
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
        out.cycles_.emplace_back(std::move(c));
    }
    if (total != static_cast<std::size_t>(largest)) {
        throw DomainError("canonicalize_cycles: cycles do not cover {1.." + std::to_string(largest) + "}");
    }
    std::sort(out.cycles_.begin(), out.cycles_.end(),
              [](const Cycle& a, const Cycle& b) { return a.min() < b.min(); });
    out.n_ = static_cast<int>(largest);
    return out;
}

inline CycleDecomposition canonicalize_cycles(const std::vector<Cycle>& cycles)
{
    std::vector<std::vector<Letter>> raw;
    raw.reserve(cycles.size());
    for (const auto& c : cycles) {
        raw.push_back(c.vec());
    }
    return canonicalize_cycles(std::move(raw));
}

/// Cycles of the function k -> p_k.
inline CycleDecomposition to_cycles(const OneLinePermutation& p)
{
    const auto n = p.size();
    std::vector<bool> done(n + 1, false);
    std::vector<std::vector<Letter>> raw;
    for (std::size_t start = 1; start <= n; ++start) {
        if (done[start]) {
            continue;
        }
        std::vector<Letter> c;
        for (auto x = start; !done[x]; x = static_cast<std::size_t>(p[x - 1])) {
            done[x] = true;
            c.push_back(static_cast<Letter>(x));
        }
        raw.push_back(std::move(c));
    }
    return canonicalize_cycles(std::move(raw));
}

inline OneLinePermutation to_one_line(const CycleDecomposition& p)
{
    std::vector<Letter> image(static_cast<std::size_t>(p.n()));
    for (const auto& c : p) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            image[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
        }
    }
    return OneLinePermutation(std::move(image));
}

/// Sum of cyclic weights over all cycles.
inline int perm_weight(const CycleDecomposition& p) noexcept
{
    int w = 0;
    for (const auto& c : p) {
        w += cycle_stats(c).weight;
    }
    return w;
}

inline bool is_odd_order(const CycleDecomposition& p) noexcept
{
    return std::all_of(p.begin(), p.end(), [](const Cycle& c) { return c.size() % 2 == 1; });
}

/// Cycle-wise reversal (the inverse permutation).
inline CycleDecomposition reversal(const CycleDecomposition& p)
{
    std::vector<std::vector<Letter>> raw;
    for (const auto& c : p) {
        raw.emplace_back(c.vec().rbegin(), c.vec().rend());
    }
    return canonicalize_cycles(std::move(raw));
}

struct CyclicLocation {
    std::size_t cycle = 0;
    std::size_t offset = 0; // 0-based, within the stored min-first word

    friend bool operator==(const CyclicLocation&, const CyclicLocation&) = default;
};

/// Where `u` occurs as a cyclic factor of some cycle of `p`.
inline std::optional<CyclicLocation> find_cyclic_factor(const CycleDecomposition& p, Letters u)
{
    if (u.empty()) {
        throw DomainError("find_cyclic_factor: empty factor");
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (auto s = detail::find_factor(p[k], u, true)) {
            return CyclicLocation{k, *s};
        }
    }
    return std::nullopt;
}

inline bool contains_cyclic_factor(const CycleDecomposition& p, Letters u)
{
    return find_cyclic_factor(p, u).has_value();
}

} // namespace permlab
