#pragma once

// Refined counts b_{n,d}(i,j) / p_{n,d}(i,j) and the matrices built from them.
// Every number here comes from one exhaustive traversal per (kind, n); no
// shortcut formulas are used, so these tables serve as the oracle for the
// bijection and identity checks.

#include "permlab/enumeration.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

using Count = std::uint64_t;

inline int max_statistic(int n) noexcept { return n >= 1 ? (n - 1) / 2 : 0; }

/// Query selector. With i and j present, counts permutations holding the
/// (cyclic) factor i n j; with d present, only descent number / cyclic weight d.
struct CountKey {
    int n = 0;
    std::optional<int> d;
    std::optional<Letter> i;
    std::optional<Letter> j;
};

inline void validate(const CountKey& key)
{
    if (key.n < 1) {
        throw DomainError("count key: n must be >= 1");
    }
    if (key.d && (*key.d < 0 || *key.d > max_statistic(key.n))) {
        throw DomainError("count key: d=" + std::to_string(*key.d) + " outside 0.."
                          + std::to_string(max_statistic(key.n)));
    }
    if (key.i.has_value() != key.j.has_value()) {
        throw DomainError("count key: i and j must be given together");
    }
    if (key.i) {
        const Letter i = *key.i;
        const Letter j = *key.j;
        if (i < 1 || j < 1 || i > key.n - 1 || j > key.n - 1 || i == j) {
            throw DomainError("count key: need 1 <= i != j <= n-1, got i=" + std::to_string(i)
                              + " j=" + std::to_string(j));
        }
    }
}

/// All refined counts of one kind at one n, indexed by (d, i, j).
class CountTable {
public:
    CountTable(Kind kind, int n)
        : kind_(kind), n_(n), side_(static_cast<std::size_t>(n - 1)),
          totals_(static_cast<std::size_t>(max_statistic(n) + 1), 0),
          cells_(totals_.size() * side_ * side_, 0)
    {
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int max_d() const noexcept { return max_statistic(n_); }

    [[nodiscard]] Count total() const noexcept
    {
        Count s = 0;
        for (auto t : totals_) {
            s += t;
        }
        return s;
    }
    [[nodiscard]] Count total(int d) const { return totals_.at(static_cast<std::size_t>(d)); }

    [[nodiscard]] Count cell(int d, Letter i, Letter j) const { return cells_.at(index(d, i, j)); }
    [[nodiscard]] Count cell(Letter i, Letter j) const
    {
        Count s = 0;
        for (int d = 0; d <= max_d(); ++d) {
            s += cell(d, i, j);
        }
        return s;
    }

    [[nodiscard]] const std::vector<Count>& totals() const noexcept { return totals_; }
    [[nodiscard]] const std::vector<Count>& cells() const noexcept { return cells_; }

    void add(int d, Count amount = 1) { totals_.at(static_cast<std::size_t>(d)) += amount; }
    void add(int d, Letter i, Letter j, Count amount = 1) { cells_.at(index(d, i, j)) += amount; }

    /// Replaces the raw arrays (used when reloading a persisted table).
    void assign(std::vector<Count> totals, std::vector<Count> cells)
    {
        if (totals.size() != totals_.size() || cells.size() != cells_.size()) {
            throw DomainError("CountTable::assign: shape mismatch");
        }
        totals_ = std::move(totals);
        cells_ = std::move(cells);
    }

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    [[nodiscard]] std::size_t index(int d, Letter i, Letter j) const
    {
        return (static_cast<std::size_t>(d) * side_ + static_cast<std::size_t>(i - 1)) * side_
             + static_cast<std::size_t>(j - 1);
    }

    Kind kind_;
    int n_;
    std::size_t side_;
    std::vector<Count> totals_;
    std::vector<Count> cells_;
};

/// One traversal of ballot (resp. odd-order) permutations of [n] filling every (d, i, j) cell.
inline CountTable compute_count_table(Kind kind, int n, const Budget& budget = {})
{
    require_within_budget(kind, n, budget);
    CountTable table(kind, n);
    if (kind == Kind::ballot) {
        for_each_ballot(n, [&](Letters w) {
            const int d = descents(w);
            table.add(d);
            for (std::size_t pos = 1; pos + 1 < w.size(); ++pos) {
                if (w[pos] == n) {
                    table.add(d, w[pos - 1], w[pos + 1]);
                    break;
                }
            }
        });
    } else {
        for_each_odd_order(n, [&](const CycleListView& v) {
            int weight = 0;
            std::optional<std::pair<Letter, Letter>> around_n;
            for (std::size_t k = 0; k < v.cycle_count(); ++k) {
                const auto c = v.cycle(k);
                weight += cycle_stats(c).weight;
                if (c.size() < 3) {
                    continue;
                }
                for (std::size_t t = 0; t < c.size(); ++t) {
                    if (c[t] == n) {
                        around_n.emplace(c[(t + c.size() - 1) % c.size()], c[(t + 1) % c.size()]);
                    }
                }
            }
            table.add(weight);
            if (around_n) {
                table.add(weight, around_n->first, around_n->second);
            }
        });
    }
    return table;
}

/// Thread-safe memo of count tables keyed by (kind, n). An optional loader and
/// saver let a front end persist tables; the memo itself never touches storage.
class CountMemo {
public:
    using Loader = std::function<std::shared_ptr<const CountTable>(Kind, int)>;
    using Saver = std::function<void(const CountTable&)>;

    void set_persistence(Loader load, Saver save)
    {
        std::lock_guard lock(mutex_);
        load_ = std::move(load);
        save_ = std::move(save);
    }

    std::shared_ptr<const CountTable> table(Kind kind, int n, const Budget& budget = {})
    {
        require_within_budget(kind, n, budget);
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(kind, n);
        if (auto it = tables_.find(key); it != tables_.end()) {
            return it->second;
        }
        std::shared_ptr<const CountTable> t;
        if (load_) {
            t = load_(kind, n);
        }
        if (!t) {
            t = std::make_shared<const CountTable>(compute_count_table(kind, n, budget));
            if (save_) {
                save_(*t);
            }
        }
        tables_.emplace(key, t);
        return t;
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        tables_.clear();
    }

private:
    std::mutex mutex_;
    std::map<std::pair<Kind, int>, std::shared_ptr<const CountTable>> tables_;
    Loader load_;
    Saver save_;
};

inline CountMemo& default_memo()
{
    static CountMemo memo;
    return memo;
}

inline Count count(Kind kind, const CountKey& key, CountMemo& memo = default_memo(), const Budget& budget = {})
{
    validate(key);
    const auto table = memo.table(kind, key.n, budget);
    if (key.i) {
        return key.d ? table->cell(*key.d, *key.i, *key.j) : table->cell(*key.i, *key.j);
    }
    return key.d ? table->total(*key.d) : table->total();
}

/// (n-1) x (n-1) matrix of refined counts, 1-based (i, j), zero diagonal.
class CountMatrix {
public:
    CountMatrix(Kind kind, int n, std::optional<int> d)
        : kind_(kind), n_(n), d_(d), entries_(static_cast<std::size_t>((n - 1) * (n - 1)), 0)
    {
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::optional<int> d() const noexcept { return d_; }
    [[nodiscard]] int side() const noexcept { return n_ - 1; }

    [[nodiscard]] Count at(Letter i, Letter j) const { return entries_.at(index(i, j)); }
    Count& at(Letter i, Letter j) { return entries_.at(index(i, j)); }

    [[nodiscard]] std::vector<std::vector<Count>> rows() const
    {
        std::vector<std::vector<Count>> out(static_cast<std::size_t>(side()));
        for (Letter i = 1; i <= side(); ++i) {
            for (Letter j = 1; j <= side(); ++j) {
                out[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
            }
        }
        return out;
    }

    /// a(i+1, j+1) == a(i, j) wherever both are defined.
    [[nodiscard]] bool is_toeplitz() const
    {
        for (Letter i = 1; i < side(); ++i) {
            for (Letter j = 1; j < side(); ++j) {
                if (at(i, j) != at(i + 1, j + 1)) {
                    return false;
                }
            }
        }
        return true;
    }

    [[nodiscard]] bool is_symmetric() const
    {
        for (Letter i = 1; i <= side(); ++i) {
            for (Letter j = i + 1; j <= side(); ++j) {
                if (at(i, j) != at(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    [[nodiscard]] std::size_t index(Letter i, Letter j) const
    {
        if (i < 1 || j < 1 || i > side() || j > side()) {
            throw DomainError("CountMatrix: index out of range");
        }
        return static_cast<std::size_t>((i - 1) * side() + (j - 1));
    }

    Kind kind_;
    int n_;
    std::optional<int> d_;
    std::vector<Count> entries_;
};

inline CountMatrix build_matrix(Kind kind, int n, std::optional<int> d, CountMemo& memo = default_memo(),
                                const Budget& budget = {})
{
    if (n < 3) {
        throw DomainError("build_matrix: n must be >= 3");
    }
    validate(CountKey{n, d, std::nullopt, std::nullopt});
    const auto table = memo.table(kind, n, budget);
    CountMatrix m(kind, n, d);
    for (Letter i = 1; i < n; ++i) {
        for (Letter j = 1; j < n; ++j) {
            if (i != j) {
                m.at(i, j) = d ? table->cell(*d, i, j) : table->cell(i, j);
            }
        }
    }
    return m;
}

/// Number of ballot permutations of [n] with d descents containing the factor u n v.
inline Count count_word_pair(int n, int d, const Word& u, const Word& v, const Budget& budget = {})
{
    if (u.empty() || v.empty()) {
        throw DomainError("count_word_pair: u and v must be nonempty");
    }
    for (Letter x : u) {
        if (x == n) {
            throw DomainError("count_word_pair: u contains n");
        }
        if (std::find(v.begin(), v.end(), x) != v.end()) {
            throw DomainError("count_word_pair: u and v share letter " + std::to_string(x));
        }
    }
    if (std::find(v.begin(), v.end(), n) != v.end()) {
        throw DomainError("count_word_pair: v contains n");
    }
    if (d < 0) {
        throw DomainError("count_word_pair: d must be >= 0");
    }
    if (u.size() + v.size() + 1 > static_cast<std::size_t>(n)) {
        return 0;
    }
    require_within_budget(Kind::ballot, n, budget);
    std::vector<Letter> pattern(u.begin(), u.end());
    pattern.push_back(n);
    pattern.insert(pattern.end(), v.begin(), v.end());
    Count total = 0;
    for_each_ballot(n, [&](Letters w) {
        if (descents(w) == d && detail::find_factor(w, pattern, false)) {
            ++total;
        }
    });
    return total;
}

} // namespace permlab
