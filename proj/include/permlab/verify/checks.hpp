#pragma once

#include "permlab/bijections.hpp"
#include "permlab/codec.hpp"
#include "permlab/counts.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/toeplitz.hpp"
#include "permlab/verify/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace permlab::verify {

struct RunOptions {
    /// Raises the per-check cap and the traversal budget to at least this n.
    std::optional<int> budget_override;
    /// Table memo to read counts from; the process-wide memo when null.
    CountMemo* memo = nullptr;
};

namespace detail {

using permlab::Count;

class Recorder {
public:
    void expect_eq(Params params, std::int64_t lhs, std::int64_t rhs)
    {
        ++cells_;
        if (lhs != rhs) {
            found_.push_back({std::move(params), lhs, rhs});
        }
    }

    /// Records a failed map property; `what` names the violated property.
    void expect(bool ok, Params params, std::string what, std::string witness)
    {
        ++cells_;
        if (!ok) {
            found_.push_back({std::move(params), std::move(what), std::move(witness)});
        }
    }

    void fail(Params params, std::string what, std::string witness)
    {
        found_.push_back({std::move(params), std::move(what), std::move(witness)});
    }

    [[nodiscard]] std::uint64_t cells() const noexcept { return cells_; }
    std::vector<Counterexample> take()
    {
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    std::uint64_t cells_ = 0;
    std::vector<Counterexample> found_;
};

inline std::int64_t as_signed(Count c) { return static_cast<std::int64_t>(c); }

class Context {
public:
    Context(CountMemo& memo, Budget budget) : memo_(memo), budget_(budget) {}

    [[nodiscard]] const Budget& budget() const noexcept { return budget_; }

    /// |class at (n, d)|, zero outside the admissible range; the empty permutation counts once at d = 0.
    std::int64_t total(Kind kind, int n, int d)
    {
        if (n == 0) {
            return d == 0 ? 1 : 0;
        }
        if (n < 0 || d < 0 || d > max_statistic(n)) {
            return 0;
        }
        return as_signed(memo_.table(kind, n, budget_)->total(d));
    }
    std::int64_t total(Kind kind, int n) { return as_signed(memo_.table(kind, n, budget_)->total()); }

    std::int64_t cell(Kind kind, int n, int d, Letter i, Letter j)
    {
        return as_signed(memo_.table(kind, n, budget_)->cell(d, i, j));
    }
    std::int64_t cell(Kind kind, int n, Letter i, Letter j)
    {
        return as_signed(memo_.table(kind, n, budget_)->cell(i, j));
    }

private:
    CountMemo& memo_;
    Budget budget_;
};

using CellKey = std::tuple<int, Letter, Letter>; // (d, i, j)

/// Ballot permutations of [n] grouped by (descents, left and right neighbour of n).
inline std::map<CellKey, std::vector<OneLinePermutation>> ballot_cells(int n, const Budget& budget)
{
    std::map<CellKey, std::vector<OneLinePermutation>> out;
    for (auto& p : enumerate_ballot(n, budget)) {
        for (std::size_t pos = 1; pos + 1 < p.size(); ++pos) {
            if (p[pos] == n) {
                out[{descents(p), p[pos - 1], p[pos + 1]}].push_back(p);
                break;
            }
        }
    }
    return out;
}

/// Odd-order permutations of [n] grouped by (cyclic weight, cyclic neighbours of n).
inline std::map<CellKey, std::vector<CycleDecomposition>> odd_cells(int n, const Budget& budget)
{
    std::map<CellKey, std::vector<CycleDecomposition>> out;
    for (auto& p : enumerate_odd_order(n, budget)) {
        const auto& c = p[p.cycle_of(n)];
        if (c.size() < 3) {
            continue;
        }
        const auto pos = static_cast<std::ptrdiff_t>(std::find(c.begin(), c.end(), n) - c.begin());
        const CellKey key{perm_weight(p), c.at_cyclic(pos - 1), c.at_cyclic(pos + 1)};
        out[key].push_back(std::move(p));
    }
    return out;
}

template <class T>
const std::vector<T>& cell_of(const std::map<CellKey, std::vector<T>>& cells, int d, Letter i, Letter j)
{
    static const std::vector<T> none;
    const auto it = cells.find({d, i, j});
    return it == cells.end() ? none : it->second;
}

inline Params nd(int n, int d) { return {{"n", n}, {"d", d}}; }
inline Params ndij(int n, int d, Letter i, Letter j) { return {{"n", n}, {"d", d}, {"i", i}, {"j", j}}; }
inline std::string show(const OneLinePermutation& p) { return format_word(p); }
inline std::string show(const CycleDecomposition& p) { return format_cycles(p); }

inline Params with(Params p, std::string key, Value v)
{
    p.emplace_back(std::move(key), std::move(v));
    return p;
}

/// (length, cyclic descents) of every cycle, sorted.
inline std::vector<std::pair<std::size_t, int>> cycle_profile(const CycleDecomposition& p)
{
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& c : p) {
        out.emplace_back(c.size(), cyclic_descents(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

inline void closed_form(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto closed = as_signed(ballot_count_closed(n));
        rec.expect_eq({{"n", n}, {"kind", "ballot"}}, ctx.total(Kind::ballot, n), closed);
        rec.expect_eq({{"n", n}, {"kind", "odd"}}, ctx.total(Kind::odd, n), closed);
    }
}

inline void recurrence(Context& ctx, Recorder& rec, int max_n, Kind kind)
{
    for (int n = 3; n <= max_n; ++n) {
        const auto rhs = ctx.total(kind, n - 1) + std::int64_t{n - 1} * (n - 2) * ctx.total(kind, n - 2);
        rec.expect_eq({{"n", n}}, ctx.total(kind, n), rhs);
    }
}

template <class Perm, class Stat, class InClass>
void adjacent_pair_bijection(Recorder& rec, Kind kind, int n, const std::map<CellKey, std::vector<Perm>>& cells,
                             std::int64_t target_size, int d, Letter i, Letter j, Stat stat, InClass in_class)
{
    const auto params = with(ndij(n, d, i, j), "kind", std::string(to_string(kind)));
    std::set<Perm> images;
    for (const auto& p : cell_of(cells, d, i, j)) {
        try {
            const auto q = contract_adjacent_pair(p, i, j);
            rec.expect(in_class(q) && stat(q) == d - 1, with(params, "perm", show(p)), "image outside class n-2, d-1",
                       show(q));
            rec.expect(expand_adjacent_pair(q, i, j) == p, with(params, "perm", show(p)), "round trip", show(q));
            images.insert(q);
        } catch (const DomainError& e) {
            rec.fail(with(params, "perm", show(p)), "domain error", e.what());
        }
    }
    rec.expect_eq(with(params, "property", "image size"), static_cast<std::int64_t>(images.size()), target_size);
}

inline void lemma21(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 3; n <= max_n; ++n) {
        const auto bcells = ballot_cells(n, ctx.budget());
        const auto pcells = odd_cells(n, ctx.budget());
        for (int d = 1; d <= max_statistic(n); ++d) {
            for (Letter i = 1; i <= n - 1; ++i) {
                for (Letter j : {i - 1, i + 1}) {
                    if (j < 1 || j > n - 1) {
                        continue;
                    }
                    const auto b_small = ctx.total(Kind::ballot, n - 2, d - 1);
                    const auto p_small = ctx.total(Kind::odd, n - 2, d - 1);
                    rec.expect_eq(with(ndij(n, d, i, j), "kind", "ballot"), ctx.cell(Kind::ballot, n, d, i, j),
                                  b_small);
                    rec.expect_eq(with(ndij(n, d, i, j), "kind", "odd"), ctx.cell(Kind::odd, n, d, i, j), p_small);
                    adjacent_pair_bijection(
                        rec, Kind::ballot, n, bcells, b_small, d, i, j,
                        [](const OneLinePermutation& q) { return descents(q); },
                        [](const OneLinePermutation& q) { return is_ballot(q); });
                    adjacent_pair_bijection(
                        rec, Kind::odd, n, pcells, p_small, d, i, j,
                        [](const CycleDecomposition& q) { return perm_weight(q); },
                        [](const CycleDecomposition& q) { return is_odd_order(q); });
                }
            }
        }
    }
}

inline void lemma22(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto all = enumerate_ballot(n, ctx.budget());
        for (Letter i = 1; i <= n - 3; ++i) {
            for (Letter j = i + 2; j <= n - 1; ++j) {
                const ShiftWords sw(i, j, n);
                for (const auto& [label, omega] : {std::pair{"lambda", sw.lambda()}, std::pair{"mu", sw.mu()}}) {
                    for (const auto& p : all) {
                        const auto dec = omega_decompose(p, omega);
                        if (!dec) {
                            continue;
                        }
                        const Params params{{"n", n}, {"i", i}, {"j", j}, {"omega", label}, {"perm", show(p)}};
                        rec.expect(dec->joined() == p, params, "parts do not concatenate to input", show(dec->joined()));
                        if (!is_ballot(dec->delta)) {
                            const bool ok = dec->gamma_last() > dec->delta.front() && height(omega) != 1;
                            rec.expect(ok, params, "non-ballot delta without gamma_last > delta_1 and h(omega) != 1",
                                       format_word(dec->delta));
                        } else {
                            rec.expect(true, params, "", "");
                        }
                    }
                }
            }
        }
    }
}

struct DecomposableSets {
    std::vector<OneLinePermutation> lambda;
    std::vector<OneLinePermutation> mu;
};

inline DecomposableSets decomposable(const std::vector<OneLinePermutation>& all, const ShiftWords& sw)
{
    DecomposableSets out;
    const auto l = sw.lambda();
    const auto m = sw.mu();
    for (const auto& p : all) {
        if (omega_decompose(p, l)) {
            out.lambda.push_back(p);
        }
        if (omega_decompose(p, m)) {
            out.mu.push_back(p);
        }
    }
    return out;
}

inline void thm23_bijection(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto all = enumerate_ballot(n, ctx.budget());
        for (Letter i = 1; i <= n - 3; ++i) {
            for (Letter j = i + 2; j <= n - 1; ++j) {
                const ShiftWords sw(i, j, n);
                const auto sets = decomposable(all, sw);
                for (const auto dir : {Direction::forward, Direction::backward}) {
                    const bool fwd = dir == Direction::forward;
                    const auto& domain = fwd ? sets.lambda : sets.mu;
                    const auto& codomain = fwd ? sets.mu : sets.lambda;
                    const auto source = fwd ? sw.lambda() : sw.mu();
                    const auto target = fwd ? sw.mu() : sw.lambda();
                    const Params base{{"n", n}, {"i", i}, {"j", j}, {"map", fwd ? "f" : "g"}};
                    std::set<OneLinePermutation> images;
                    for (const auto& p : domain) {
                        const auto params = with(base, "perm", show(p));
                        try {
                            const auto from = *omega_decompose(p, source);
                            const auto q = shift_fg(p, sw, dir);
                            const auto to = omega_decompose(q, target);
                            const OmegaDecomposition expected{reversal(from.gamma), target, reversal(from.alpha),
                                                              from.delta};
                            rec.expect(to.has_value() && *to == expected, params,
                                       "image decomposition is not (gamma', target, alpha', delta)", show(q));
                            const auto back = shift_fg(q, sw, fwd ? Direction::backward : Direction::forward);
                            rec.expect(back == p, params, "round trip", show(back));
                            images.insert(q);
                        } catch (const DomainError& e) {
                            rec.fail(params, "domain error", e.what());
                        }
                    }
                    rec.expect_eq(with(base, "property", "image size"), static_cast<std::int64_t>(images.size()),
                                  static_cast<std::int64_t>(codomain.size()));
                }
            }
        }
    }
}

inline void x_lambda_identity(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto all = enumerate_ballot(n, ctx.budget());
        for (Letter i = 1; i <= n - 3; ++i) {
            for (Letter j = i + 2; j <= n - 1; ++j) {
                const auto sets = decomposable(all, ShiftWords(i, j, n));
                rec.expect_eq({{"n", n}, {"i", i}, {"j", j}, {"set", "lambda"}},
                              static_cast<std::int64_t>(sets.lambda.size()),
                              ctx.cell(Kind::ballot, n, i, j - 1) - ctx.cell(Kind::ballot, n, i, j));
                rec.expect_eq({{"n", n}, {"i", i}, {"j", j}, {"set", "mu"}}, static_cast<std::int64_t>(sets.mu.size()),
                              ctx.cell(Kind::ballot, n, j, i) - ctx.cell(Kind::ballot, n, j - 1, i));
            }
        }
    }
}

inline void phi_bijection(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto all = enumerate_ballot(n, ctx.budget());
        for (Letter i = 1; i <= n - 3; ++i) {
            for (Letter j = i + 2; j <= n - 1; ++j) {
                const ShiftWords sw(i, j, n);
                const Word from_core{i, n, j - 1};
                const Word to_core{i, n, j};
                const Params base{{"n", n}, {"i", i}, {"j", j}};
                std::set<OneLinePermutation> images;
                for (const auto& p : all) {
                    if (!contains_factor(p, from_core) || omega_decompose(p, sw.lambda())) {
                        continue;
                    }
                    const auto params = with(base, "perm", show(p));
                    try {
                        const auto q = phi_exchange(p, i, j);
                        rec.expect(is_ballot(q) && contains_factor(q, to_core), params, "image outside B_n(i,j)",
                                   show(q));
                        std::vector<Letter> back = q.vec();
                        for (auto& x : back) {
                            x = x == j ? j - 1 : (x == j - 1 ? j : x);
                        }
                        rec.expect(OneLinePermutation(back) == p, params, "not an involution", format_word(back));
                        images.insert(q);
                    } catch (const DomainError& e) {
                        rec.fail(params, "domain error", e.what());
                    }
                }
                rec.expect_eq(with(base, "property", "image size"), static_cast<std::int64_t>(images.size()),
                              ctx.cell(Kind::ballot, n, i, j));
            }
        }
    }
}

inline void toeplitz(Context& ctx, Recorder& rec, int max_n, Kind kind)
{
    for (int n = 3; n <= max_n; ++n) {
        for (int d = 0; d <= max_statistic(n); ++d) {
            for (Letter i = 1; i <= n - 2; ++i) {
                for (Letter j = 1; j <= n - 2; ++j) {
                    if (i != j) {
                        rec.expect_eq(ndij(n, d, i, j), ctx.cell(kind, n, d, i, j), ctx.cell(kind, n, d, i + 1, j + 1));
                    }
                }
            }
        }
    }
}

inline void symmetry_p(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 3; n <= max_n; ++n) {
        for (int d = 0; d <= max_statistic(n); ++d) {
            for (Letter i = 1; i <= n - 1; ++i) {
                for (Letter j = i + 1; j <= n - 1; ++j) {
                    rec.expect_eq(ndij(n, d, i, j), ctx.cell(Kind::odd, n, d, i, j), ctx.cell(Kind::odd, n, d, j, i));
                }
            }
        }
    }
}

/// Letters below m or in [M+2, n-1] keep their positions.
inline bool fixes_outer_letters(Letters before, Letters after, Letter m, Letter M, int n)
{
    for (std::size_t k = 0; k < before.size(); ++k) {
        const Letter x = before[k];
        if ((x < m || (x >= M + 2 && x <= n - 1)) && after[k] != x) {
            return false;
        }
    }
    return true;
}

inline bool fixes_outer_letters(const CycleDecomposition& before, const CycleDecomposition& after, Letter m,
                                Letter M, int n)
{
    const auto f = to_one_line(before);
    const auto g = to_one_line(after);
    for (Letter x = 1; x <= n - 1; ++x) {
        if (x < m || x >= M + 2) {
            const Letter fx = f[static_cast<std::size_t>(x - 1)];
            const Letter gx = g[static_cast<std::size_t>(x - 1)];
            // x and its image under the permutation are both outer letters: the arc must survive.
            if ((fx < m || (fx >= M + 2 && fx <= n - 1)) && gx != fx) {
                return false;
            }
        }
    }
    return true;
}

template <class Perm, class SameStats>
void shift_roundtrip(Recorder& rec, Kind kind, int n, const std::map<CellKey, std::vector<Perm>>& cells, int d,
                     Letter i, Letter j, SameStats same_stats)
{
    const auto base = with(ndij(n, d, i, j), "kind", std::string(to_string(kind)));
    const Letter m = std::min(i, j);
    const Letter M = std::max(i, j);
    const auto& domain = cell_of(cells, d, i, j);
    const auto& codomain = cell_of(cells, d, i + 1, j + 1);
    const std::set<Perm> codomain_set(codomain.begin(), codomain.end());
    std::set<Perm> images;
    for (const auto& p : domain) {
        const auto params = with(base, "perm", show(p));
        try {
            const auto lower = lower_core_data(p, i, j);
            const auto s = diagonal_shift(p, i, j);
            rec.expect(codomain_set.count(s) == 1, params, "image outside target cell", show(s));
            rec.expect(same_stats(p, s), params, "statistics not preserved", show(s));
            rec.expect(diagonal_unshift(s, i, j) == p, params, "unshift(shift(p)) != p", show(s));
            rec.expect(upper_core_data(s, i, j).width == lower.width, params, "lower width != upper width of image",
                       show(s));
            rec.expect(lower.width >= 0 && lower.width <= M - m + 1, params, "width out of bounds",
                       std::to_string(lower.width));
            if constexpr (std::is_same_v<Perm, CycleDecomposition>) {
                const auto& c = p[*lower.position.cycle];
                if (c.size() == lower.core.size()) {
                    rec.expect(lower.width >= 1 && lower.width <= M - m, params, "whole-cycle core width out of bounds",
                               std::to_string(lower.width));
                }
                rec.expect(fixes_outer_letters(p, s, m, M, n), params, "outer letters moved", show(s));
            } else {
                rec.expect(fixes_outer_letters(p, s, m, M, n), params, "outer letters moved", show(s));
            }
            images.insert(s);
        } catch (const DomainError& e) {
            rec.fail(params, "domain error", e.what());
        }
    }
    rec.expect_eq(with(base, "property", "image size"), static_cast<std::int64_t>(images.size()),
                  static_cast<std::int64_t>(codomain.size()));
    for (const auto& s : codomain) {
        try {
            rec.expect(diagonal_shift(diagonal_unshift(s, i, j), i, j) == s, with(base, "perm", show(s)),
                       "shift(unshift(s)) != s", show(s));
        } catch (const DomainError& e) {
            rec.fail(with(base, "perm", show(s)), "domain error", e.what());
        }
    }
}

inline void t_roundtrip(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto bcells = ballot_cells(n, ctx.budget());
        const auto pcells = odd_cells(n, ctx.budget());
        for (int d = 0; d <= max_statistic(n); ++d) {
            for (Letter i = 1; i <= n - 2; ++i) {
                for (Letter j = 1; j <= n - 2; ++j) {
                    if (i == j) {
                        continue;
                    }
                    shift_roundtrip(rec, Kind::ballot, n, bcells, d, i, j,
                                    [](const OneLinePermutation& a, const OneLinePermutation& b) {
                                        return descents(a) == descents(b);
                                    });
                    shift_roundtrip(rec, Kind::odd, n, pcells, d, i, j,
                                    [](const CycleDecomposition& a, const CycleDecomposition& b) {
                                        return cycle_profile(a) == cycle_profile(b);
                                    });
                }
            }
        }
    }
}

inline void conj_spiro(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        for (int d = 0; d <= max_statistic(n); ++d) {
            rec.expect_eq(nd(n, d), ctx.total(Kind::ballot, n, d), ctx.total(Kind::odd, n, d));
        }
    }
}

inline void conj_refined(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 3; n <= max_n; ++n) {
        for (int d = 0; d <= max_statistic(n); ++d) {
            for (Letter j = 2; j <= n - 1; ++j) {
                rec.expect_eq(with(nd(n, d), "j", j),
                              ctx.cell(Kind::ballot, n, d, 1, j) + ctx.cell(Kind::ballot, n, d, j, 1),
                              2 * ctx.cell(Kind::odd, n, d, 1, j));
            }
        }
    }
}

inline void prop41(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 3; n <= max_n; ++n) {
        rec.expect_eq({{"n", n}, {"d", 0}, {"quantity", "b_{n,0}"}}, ctx.total(Kind::ballot, n, 0), 1);
        rec.expect_eq({{"n", n}, {"d", 0}, {"quantity", "p_{n,0}"}}, ctx.total(Kind::odd, n, 0), 1);
        rec.expect_eq({{"n", n}, {"quantity", "b_{n,1}(1,2)"}}, ctx.cell(Kind::ballot, n, 1, 1, 2), 1);
        rec.expect_eq({{"n", n}, {"quantity", "b_{n,1}(2,1)"}}, ctx.cell(Kind::ballot, n, 1, 2, 1), 1);
        rec.expect_eq({{"n", n}, {"quantity", "p_{n,1}(1,2)"}}, ctx.cell(Kind::odd, n, 1, 1, 2), 1);
        for (Letter j = 3; j <= n - 1; ++j) {
            rec.expect_eq({{"n", n}, {"j", j}, {"quantity", "b_{n,1}(j,1)"}}, ctx.cell(Kind::ballot, n, 1, j, 1),
                          std::int64_t{1} << (j - 2));
            rec.expect_eq({{"n", n}, {"j", j}, {"quantity", "b_{n,1}(1,j)"}}, ctx.cell(Kind::ballot, n, 1, 1, j), 0);
            rec.expect_eq({{"n", n}, {"j", j}, {"quantity", "p_{n,1}(1,j)"}}, ctx.cell(Kind::odd, n, 1, 1, j),
                          std::int64_t{1} << (j - 3));
        }
    }
}

inline void lemma42(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 4; n <= max_n; ++n) {
        const auto cells = odd_cells(n, ctx.budget());
        for (int d = 0; d <= max_statistic(n); ++d) {
            rec.expect_eq(with(nd(n, d), "property", "p(1,2) = p(1,3)"), ctx.cell(Kind::odd, n, d, 1, 2),
                          ctx.cell(Kind::odd, n, d, 1, 3));
            const auto& codomain = cell_of(cells, d, 1, 3);
            const std::set<CycleDecomposition> codomain_set(codomain.begin(), codomain.end());
            std::set<CycleDecomposition> images;
            for (const auto& p : cell_of(cells, d, 1, 2)) {
                const auto params = with(nd(n, d), "perm", show(p));
                try {
                    const auto q = flip_two_three(p);
                    rec.expect(codomain_set.count(q) == 1, params, "image outside P_{n,d}(1,3)", show(q));
                    rec.expect(perm_weight(q) == perm_weight(p), params, "weight changed", show(q));
                    std::vector<std::size_t> la, lb;
                    for (const auto& c : p) {
                        la.push_back(c.size());
                    }
                    for (const auto& c : q) {
                        lb.push_back(c.size());
                    }
                    std::sort(la.begin(), la.end());
                    std::sort(lb.begin(), lb.end());
                    rec.expect(la == lb, params, "cycle lengths changed", show(q));
                    rec.expect(flip_two_three(q) == p, params, "not an involution", show(q));
                    images.insert(q);
                } catch (const DomainError& e) {
                    rec.fail(params, "domain error", e.what());
                }
            }
            rec.expect_eq(with(nd(n, d), "property", "image size"), static_cast<std::int64_t>(images.size()),
                          static_cast<std::int64_t>(codomain.size()));
        }
    }
}

inline void prop43_words(Context& ctx, Recorder& rec, int max_n)
{
    const Word one{1}, two{2}, three{3}, two_three{2, 3}, three_two{3, 2};
    for (int n = 4; n <= max_n; ++n) {
        for (int d = 0; d <= max_statistic(n); ++d) {
            const auto b = [&](const Word& u, const Word& v) {
                return as_signed(count_word_pair(n, d, u, v, ctx.budget()));
            };
            const auto b_1_23 = b(one, two_three);
            const auto b_23_1 = b(two_three, one);
            const auto b_1_32 = b(one, three_two);
            const auto b_32_1 = b(three_two, one);
            const auto shorter_d1 = ctx.total(Kind::ballot, n - 3, d - 1);
            const auto shorter_d2 = ctx.total(Kind::ballot, n - 3, d - 2);
            rec.expect_eq(with(nd(n, d), "identity", "b(1,23) = b_{n-3,d-1}"), b_1_23, shorter_d1);
            rec.expect_eq(with(nd(n, d), "identity", "b(23,1) = b_{n-3,d-1}"), b_23_1, shorter_d1);
            rec.expect_eq(with(nd(n, d), "identity", "b(1,32) = b_{n-3,d-2}"), b_1_32, shorter_d2);
            rec.expect_eq(with(nd(n, d), "identity", "b(32,1) = b_{n-3,d-2}"), b_32_1, shorter_d2);
            rec.expect_eq(with(nd(n, d), "identity", "b(1,2) - b(1,3) = b(1,23) - b(1,32)"),
                          ctx.cell(Kind::ballot, n, d, 1, 2) - ctx.cell(Kind::ballot, n, d, 1, 3), b_1_23 - b_1_32);
            rec.expect_eq(with(nd(n, d), "identity", "b(3,1) - b(2,1) = b(23,1) - b(32,1)"),
                          ctx.cell(Kind::ballot, n, d, 3, 1) - ctx.cell(Kind::ballot, n, d, 2, 1), b_23_1 - b_32_1);
        }
    }
}

inline void eq_bnd_pnd(Context& ctx, Recorder& rec, int max_n)
{
    for (int n = 2; n <= max_n; ++n) {
        for (const Kind kind : {Kind::ballot, Kind::odd}) {
            for (int d = 0; d <= max_statistic(n); ++d) {
                std::int64_t sum = 0;
                for (Letter i = 1; i <= n - 1; ++i) {
                    for (Letter j = 1; j <= n - 1; ++j) {
                        if (i != j) {
                            sum += ctx.cell(kind, n, d, i, j);
                        }
                    }
                }
                rec.expect_eq(with(nd(n, d), "kind", std::string(to_string(kind))), ctx.total(kind, n, d),
                              ctx.total(kind, n - 1, d) + sum);
            }
        }
    }
}

} // namespace detail

/// Runs one named check exhaustively for every n up to `max_n`.
/// Throws BudgetError when `max_n` exceeds the check's cap (before doing any work),
/// DomainError when `max_n` is below the smallest meaningful n.
inline VerificationReport run_check(CheckId id, int max_n, const RunOptions& options = {})
{
    const auto& ci = info(id);
    const int cap = options.budget_override ? std::max(ci.budget_max_n, *options.budget_override) : ci.budget_max_n;
    if (max_n > cap) {
        throw BudgetError("check " + std::string(ci.name) + " at max_n=" + std::to_string(max_n)
                          + " exceeds budget " + std::to_string(cap));
    }
    if (max_n < ci.min_n) {
        throw DomainError("check " + std::string(ci.name) + " needs max_n >= " + std::to_string(ci.min_n));
    }
    const Budget budget = options.budget_override ? Budget::at_least(*options.budget_override) : Budget{};
    detail::Context ctx(options.memo ? *options.memo : default_memo(), budget);
    detail::Recorder rec;

    const auto started = std::chrono::steady_clock::now();
    switch (id) {
    case CheckId::closed_form: detail::closed_form(ctx, rec, max_n); break;
    case CheckId::recurrence_b: detail::recurrence(ctx, rec, max_n, Kind::ballot); break;
    case CheckId::recurrence_p: detail::recurrence(ctx, rec, max_n, Kind::odd); break;
    case CheckId::lemma21: detail::lemma21(ctx, rec, max_n); break;
    case CheckId::lemma22: detail::lemma22(ctx, rec, max_n); break;
    case CheckId::thm23_bijection: detail::thm23_bijection(ctx, rec, max_n); break;
    case CheckId::x_lambda_identity: detail::x_lambda_identity(ctx, rec, max_n); break;
    case CheckId::phi_bijection: detail::phi_bijection(ctx, rec, max_n); break;
    case CheckId::toeplitz_B: detail::toeplitz(ctx, rec, max_n, Kind::ballot); break;
    case CheckId::toeplitz_P: detail::toeplitz(ctx, rec, max_n, Kind::odd); break;
    case CheckId::symmetry_P: detail::symmetry_p(ctx, rec, max_n); break;
    case CheckId::T_roundtrip: detail::t_roundtrip(ctx, rec, max_n); break;
    case CheckId::conj_spiro: detail::conj_spiro(ctx, rec, max_n); break;
    case CheckId::conj_refined: detail::conj_refined(ctx, rec, max_n); break;
    case CheckId::prop41: detail::prop41(ctx, rec, max_n); break;
    case CheckId::lemma42: detail::lemma42(ctx, rec, max_n); break;
    case CheckId::prop43_words: detail::prop43_words(ctx, rec, max_n); break;
    case CheckId::eq_bnd_pnd: detail::eq_bnd_pnd(ctx, rec, max_n); break;
    }

    VerificationReport report;
    report.check = id;
    report.max_n = max_n;
    report.cells_checked = rec.cells();
    report.counterexamples = rec.take();
    report.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    return report;
}

inline VerificationReport run_check(CheckId id, const RunOptions& options = {})
{
    return run_check(id, info(id).default_max_n, options);
}

} // namespace permlab::verify
