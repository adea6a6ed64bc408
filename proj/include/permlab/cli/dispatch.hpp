#pragma once

#include "permlab/bijections.hpp"
#include "permlab/cli/cache.hpp"
#include "permlab/codec.hpp"
#include "permlab/counts.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/toeplitz.hpp"
#include "permlab/verify/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace permlab::cli {

using Environment = std::function<std::optional<std::string>(const std::string&)>;

inline std::optional<std::string> process_environment(const std::string& name)
{
    if (const char* v = std::getenv(name.c_str())) {
        return std::string(v);
    }
    return std::nullopt;
}

enum class ExitCode : int { ok = 0, check_failed = 1, usage = 2 };

namespace detail {

using json = nlohmann::ordered_json;

inline json to_json_array(Letters w) { return json(std::vector<Letter>(w.begin(), w.end())); }

inline json to_json_array(const CycleDecomposition& p)
{
    json out = json::array();
    for (const auto& c : p) {
        out.push_back(to_json_array(c));
    }
    return out;
}

struct Options {
    std::string cache_dir;
    std::optional<int> budget;

    std::string kind;
    int n = 0;
    std::optional<int> d;
    std::optional<Letter> i;
    std::optional<Letter> j;
    std::string format;

    std::string op;
    std::string perm;
    bool inverse = false;

    std::string check;
    std::optional<int> max_n;
    bool no_timing = false;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, CountMemo& memo)
        : o_(o), out_(out), memo_(memo), budget_(o.budget ? Budget::at_least(*o.budget) : Budget{})
    {
    }

    int count()
    {
        const Kind kind = parse_kind(o_.kind);
        out_ << permlab::count(kind, CountKey{o_.n, o_.d, o_.i, o_.j}, memo_, budget_) << '\n';
        return 0;
    }

    int matrix()
    {
        const auto m = build_matrix(parse_kind(o_.kind), o_.n, o_.d, memo_, budget_);
        const auto rows = m.rows();
        if (o_.format == "json") {
            json j{{"kind", std::string(to_string(m.kind()))},
                   {"n", m.n()},
                   {"d", m.d() ? json(*m.d()) : json(nullptr)},
                   {"entries", rows}};
            out_ << j.dump() << '\n';
        } else if (o_.format == "csv") {
            out_ << "i\\j";
            for (int c = 1; c <= m.side(); ++c) {
                out_ << ',' << c;
            }
            out_ << '\n';
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out_ << r + 1;
                for (auto x : rows[r]) {
                    out_ << ',' << x;
                }
                out_ << '\n';
            }
        } else {
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out_ << (c ? " " : "") << row[c];
                }
                out_ << '\n';
            }
        }
        return 0;
    }

    int enumerate()
    {
        const Kind kind = parse_kind(o_.kind);
        const bool as_json = o_.format == "json";
        json all = json::array();
        if (kind == Kind::ballot) {
            for_each_ballot_checked(kind, [&](Letters w) {
                if (as_json) {
                    all.push_back(to_json_array(w));
                } else {
                    out_ << format_word(w) << '\n';
                }
            });
        } else {
            require_within_budget(kind, o_.n, budget_);
            for_each_odd_order(o_.n, [&](const CycleListView& v) {
                const auto p = v.to_decomposition();
                if (as_json) {
                    all.push_back(to_json_array(p));
                } else {
                    out_ << format_cycles(p) << '\n';
                }
            });
        }
        if (as_json) {
            out_ << all.dump() << '\n';
        }
        return 0;
    }

    int map()
    {
        const bool cyclic = o_.kind == "cyclic";
        const auto need_pair = [&] {
            if (!o_.i || !o_.j) {
                throw DomainError("map --op " + o_.op + " needs --i and --j");
            }
            return std::pair{*o_.i, *o_.j};
        };
        const auto need_linear = [&] {
            if (cyclic) {
                throw DomainError("map --op " + o_.op + " is defined for --kind linear only");
            }
        };
        if (o_.op == "flip") {
            if (!cyclic) {
                throw DomainError("map --op flip is defined for --kind cyclic only");
            }
            return emit(flip_two_three(parse_cycles(o_.perm)));
        }
        const auto [i, j] = need_pair();
        if (o_.op == "T" || o_.op == "Tinv") {
            const bool fwd = (o_.op == "T") != o_.inverse;
            if (cyclic) {
                const auto p = parse_cycles(o_.perm);
                return emit(fwd ? diagonal_shift(p, i, j) : diagonal_unshift(p, i, j));
            }
            const auto p = parse_one_line(o_.perm);
            return emit(fwd ? diagonal_shift(p, i, j) : diagonal_unshift(p, i, j));
        }
        if (o_.op == "f" || o_.op == "g") {
            need_linear();
            const auto p = parse_one_line(o_.perm);
            const bool fwd = (o_.op == "f") != o_.inverse;
            return emit(shift_fg(p, ShiftWords(i, j, p.n()), fwd ? Direction::forward : Direction::backward));
        }
        if (o_.op == "phi") {
            need_linear();
            if (o_.inverse) {
                throw DomainError("map --op phi has no --inverse form here");
            }
            return emit(phi_exchange(parse_one_line(o_.perm), i, j));
        }
        if (o_.op == "contract") {
            if (cyclic) {
                const auto p = parse_cycles(o_.perm);
                return emit(o_.inverse ? expand_adjacent_pair(p, i, j) : contract_adjacent_pair(p, i, j));
            }
            const auto p = parse_one_line(o_.perm);
            return emit(o_.inverse ? expand_adjacent_pair(p, i, j) : contract_adjacent_pair(p, i, j));
        }
        throw DomainError("unknown map op " + o_.op);
    }

    int verify()
    {
        verify::RunOptions ro;
        ro.budget_override = o_.budget;
        ro.memo = &memo_;
        std::vector<verify::VerificationReport> reports;
        if (o_.check == "all") {
            reports = verify::run_all(o_.max_n, ro);
        } else {
            const auto id = verify::parse_check(o_.check);
            if (!id) {
                throw DomainError("unknown check " + o_.check);
            }
            reports.push_back(o_.max_n ? verify::run_check(*id, *o_.max_n, ro) : verify::run_check(*id, ro));
        }
        const bool timing = !o_.no_timing;
        if (o_.format == "text") {
            for (const auto& r : reports) {
                verify::write_text(out_, r, timing);
            }
        } else if (reports.size() == 1 && o_.check != "all") {
            out_ << verify::to_json(reports.front(), timing).dump() << '\n';
        } else {
            json all = json::array();
            for (const auto& r : reports) {
                all.push_back(verify::to_json(r, timing));
            }
            out_ << all.dump() << '\n';
        }
        const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
        return ok ? 0 : 1;
    }

    int list_checks()
    {
        for (const auto& c : verify::list_checks()) {
            out_ << c.name << '\t' << c.default_max_n << '\t' << c.description << '\n';
        }
        return 0;
    }

private:
    template <class Visit>
    void for_each_ballot_checked(Kind kind, Visit&& visit)
    {
        require_within_budget(kind, o_.n, budget_);
        for_each_ballot(o_.n, std::forward<Visit>(visit));
    }

    int emit(const OneLinePermutation& p)
    {
        out_ << (o_.format == "json" ? to_json_array(p).dump() : format_word(p)) << '\n';
        return 0;
    }
    int emit(const CycleDecomposition& p)
    {
        out_ << (o_.format == "json" ? to_json_array(p).dump() : format_cycles(p)) << '\n';
        return 0;
    }

    const Options& o_;
    std::ostream& out_;
    CountMemo& memo_;
    Budget budget_;
};

} // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
/// Exit code 0 on success or pass, 1 when a check found counterexamples,
/// 2 on usage, domain or budget errors.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                    const Environment& env = process_environment)
{
    detail::Options o;
    struct {
        std::string matrix, enumerate, map, verify;
    } formats;
    CLI::App app{"Ballot and odd-order permutation toolkit", "permlab"};
    app.require_subcommand(1);
    app.add_option("--cache-dir", o.cache_dir, "Directory for cached count tables (default: $PERMLAB_CACHE)");
    app.add_option("--budget", o.budget, "Raise exhaustive-traversal and check budgets to this n");

    const auto kinds = CLI::IsMember({"ballot", "odd"});

    auto* count = app.add_subcommand("count", "Count ballot or odd-order permutations");
    count->add_option("--kind", o.kind)->required()->check(kinds);
    count->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    count->add_option("--d", o.d);
    count->add_option("--i", o.i);
    count->add_option("--j", o.j);

    auto* matrix = app.add_subcommand("matrix", "Print the matrix of counts b(i,j) or p(i,j)");
    matrix->add_option("--kind", o.kind)->required()->check(kinds);
    matrix->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    matrix->add_option("--d", o.d);
    matrix->add_option("--format", formats.matrix)->check(CLI::IsMember({"text", "csv", "json"}))->default_val("text");

    auto* enumerate = app.add_subcommand("enumerate", "List every permutation of one kind");
    enumerate->add_option("--kind", o.kind)->required()->check(kinds);
    enumerate->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--format", formats.enumerate)->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* map = app.add_subcommand("map", "Apply one of the bijections to a permutation");
    map->add_option("--op", o.op)
        ->required()
        ->check(CLI::IsMember({"T", "Tinv", "f", "g", "phi", "contract", "flip"}));
    map->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"linear", "cyclic"}));
    map->add_option("--i", o.i);
    map->add_option("--j", o.j);
    map->add_flag("--inverse", o.inverse, "Apply the inverse map");
    map->add_option("--perm", o.perm, "One-line word \"3 8 2 ...\" or cycles \"(1 2 3)(4)\"")->required();
    map->add_option("--format", formats.map)->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* verify = app.add_subcommand("verify", "Run a named exhaustive check, or all of them");
    verify->add_option("--check", o.check)->required();
    verify->add_option("--max-n", o.max_n);
    verify->add_option("--format", formats.verify)->check(CLI::IsMember({"json", "text"}))->default_val("json");
    verify->add_flag("--no-timing", o.no_timing, "Omit wall-clock times so output is reproducible");

    auto* list = app.add_subcommand("list-checks", "List the check catalog");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    for (auto [sub, f] : {std::pair{matrix, &formats.matrix}, std::pair{enumerate, &formats.enumerate},
                          std::pair{map, &formats.map}, std::pair{verify, &formats.verify}}) {
        if (sub->parsed()) {
            o.format = *f;
        }
    }
    if (o.cache_dir.empty()) {
        o.cache_dir = env("PERMLAB_CACHE").value_or("");
    }
    CountMemo memo;
    if (!o.cache_dir.empty()) {
        TableCache(o.cache_dir).attach(memo);
    }

    detail::Runner runner(o, out, memo);
    try {
        if (count->parsed()) {
            return runner.count();
        }
        if (matrix->parsed()) {
            return runner.matrix();
        }
        if (enumerate->parsed()) {
            return runner.enumerate();
        }
        if (map->parsed()) {
            return runner.map();
        }
        if (verify->parsed()) {
            return runner.verify();
        }
        if (list->parsed()) {
            return runner.list_checks();
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
    }
    return static_cast<int>(ExitCode::usage);
}

} // namespace permlab::cli
