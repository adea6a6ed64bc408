#pragma once

#include "permlab/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace permlab {

using Letter = int;
using Letters = std::span<const Letter>;

namespace detail {

inline void require_distinct_positive(Letters letters, const char* what)
{
    std::unordered_set<Letter> seen;
    seen.reserve(letters.size());
    for (Letter x : letters) {
        if (x < 1) {
            throw DomainError(std::string(what) + ": letters must be positive, got " + std::to_string(x));
        }
        if (!seen.insert(x).second) {
            throw DomainError(std::string(what) + ": repeated letter " + std::to_string(x));
        }
    }
}

} // namespace detail

/// A finite sequence of pairwise distinct positive integers. The empty word is allowed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters))
    {
        detail::require_distinct_positive(letters_, "Word");
    }
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    [[nodiscard]] Letters letters() const noexcept { return letters_; }
    [[nodiscard]] const std::vector<Letter>& vec() const noexcept { return letters_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] Letter operator[](std::size_t k) const { return letters_[k]; }
    [[nodiscard]] Letter front() const { return letters_.front(); }
    [[nodiscard]] Letter back() const { return letters_.back(); }
    [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
    [[nodiscard]] auto end() const noexcept { return letters_.end(); }

    operator Letters() const noexcept { return letters_; }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Concatenation of words with disjoint alphabets.
inline Word concat(std::initializer_list<Letters> parts)
{
    std::vector<Letter> out;
    for (Letters p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return Word(std::move(out));
}

/// A word whose letter set is exactly {1, ..., n}.
class OneLinePermutation {
public:
    OneLinePermutation() = default;
    explicit OneLinePermutation(std::vector<Letter> letters) : word_(std::move(letters))
    {
        const auto n = static_cast<Letter>(word_.size());
        for (Letter x : word_) {
            if (x > n) {
                throw DomainError("OneLinePermutation: letter " + std::to_string(x) + " exceeds length "
                                  + std::to_string(n));
            }
        }
    }
    OneLinePermutation(std::initializer_list<Letter> letters)
        : OneLinePermutation(std::vector<Letter>(letters))
    {
    }
    explicit OneLinePermutation(const Word& w) : OneLinePermutation(w.vec()) {}

    static OneLinePermutation identity(int n)
    {
        std::vector<Letter> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return OneLinePermutation(std::move(v));
    }

    [[nodiscard]] int n() const noexcept { return static_cast<int>(word_.size()); }
    [[nodiscard]] const Word& word() const noexcept { return word_; }
    [[nodiscard]] Letters letters() const noexcept { return word_.letters(); }
    [[nodiscard]] const std::vector<Letter>& vec() const noexcept { return word_.vec(); }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }
    [[nodiscard]] Letter operator[](std::size_t k) const { return word_[k]; }
    [[nodiscard]] auto begin() const noexcept { return word_.begin(); }
    [[nodiscard]] auto end() const noexcept { return word_.end(); }

    operator Letters() const noexcept { return word_.letters(); }

    friend auto operator<=>(const OneLinePermutation&, const OneLinePermutation&) = default;
    friend bool operator==(const OneLinePermutation&, const OneLinePermutation&) = default;

private:
    Word word_;
};

/// Ascent/descent marker at each adjacent position: -1 for a descent, +1 for an ascent.
struct Signature {
    std::vector<int> entries;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct DescentStats {
    int asc = 0;
    int des = 0;

    friend bool operator==(const DescentStats&, const DescentStats&) = default;
};

inline DescentStats descent_stats(Letters w) noexcept
{
    DescentStats s;
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k - 1] > w[k]) {
            ++s.des;
        } else {
            ++s.asc;
        }
    }
    return s;
}

inline int descents(Letters w) noexcept { return descent_stats(w).des; }

/// asc(w) - des(w); zero for the empty word.
inline int height(Letters w) noexcept
{
    const auto s = descent_stats(w);
    return s.asc - s.des;
}

inline Signature signature(Letters w)
{
    Signature sig;
    if (w.size() > 1) {
        sig.entries.reserve(w.size() - 1);
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
        sig.entries.push_back(w[k - 1] > w[k] ? -1 : 1);
    }
    return sig;
}

/// True iff every prefix has nonnegative height.
inline bool is_ballot(Letters w) noexcept
{
    int h = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        h += w[k - 1] < w[k] ? 1 : -1;
        if (h < 0) {
            return false;
        }
    }
    return true;
}

inline Word reversal(const Word& w)
{
    return Word(std::vector<Letter>(w.vec().rbegin(), w.vec().rend()));
}

/// Order-isomorphic relabelling onto {1, ..., length}.
inline OneLinePermutation standard_form(Letters w)
{
    if (w.empty()) {
        throw DomainError("standard_form: empty word");
    }
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    std::vector<Letter> out(w.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        out[order[rank]] = static_cast<Letter>(rank + 1);
    }
    return OneLinePermutation(std::move(out));
}

namespace detail {

/// 0-based start of the first occurrence of `u` in `host`, reading `host`
/// cyclically when requested. A factor longer than a cyclic host never matches.
inline std::optional<std::size_t> find_factor(Letters host, Letters u, bool cyclic) noexcept
{
    const std::size_t k = host.size();
    if (u.empty() || u.size() > k) {
        return std::nullopt;
    }
    const std::size_t starts = cyclic ? k : k - u.size() + 1;
    for (std::size_t s = 0; s < starts; ++s) {
        bool ok = true;
        for (std::size_t t = 0; t < u.size() && ok; ++t) {
            ok = host[(s + t) % k] == u[t];
        }
        if (ok) {
            return s;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// 1-based start index of `u` inside `host`, or nothing. With `cyclic` the
/// match may wrap from the end of `host` back to its start.
inline std::optional<std::size_t> locate_factor(Letters host, Letters u, bool cyclic = false)
{
    if (u.empty()) {
        throw DomainError("locate_factor: empty factor");
    }
    if (auto s = detail::find_factor(host, u, cyclic)) {
        return *s + 1;
    }
    return std::nullopt;
}

inline bool contains_factor(Letters host, Letters u) { return locate_factor(host, u, false).has_value(); }

} // namespace permlab
