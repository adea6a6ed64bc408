#pragma once

#include "permlab/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace permlab::verify {

enum class CheckId {
    closed_form,
    recurrence_b,
    recurrence_p,
    lemma21,
    lemma22,
    thm23_bijection,
    x_lambda_identity,
    phi_bijection,
    toeplitz_B,
    toeplitz_P,
    symmetry_P,
    T_roundtrip,
    conj_spiro,
    conj_refined,
    prop41,
    lemma42,
    prop43_words,
    eq_bnd_pnd,
};

struct CheckInfo {
    CheckId id;
    std::string_view name;
    std::string_view description;
    /// Budget used when no max_n is given.
    int default_max_n;
    /// Largest max_n accepted without an explicit budget override.
    int budget_max_n;
    /// Smallest n at which the check has anything to compare.
    int min_n;
};

// clang-format off
inline constexpr std::array<CheckInfo, 18> catalog{{
    {CheckId::closed_form,       "closed_form",       "enumerated ballot and odd-order counts equal the double-factorial closed form", 10, 10, 1},
    {CheckId::recurrence_b,      "recurrence_b",      "b_n = b_{n-1} + (n-1)(n-2) b_{n-2} on enumerated ballot counts",               10, 10, 3},
    {CheckId::recurrence_p,      "recurrence_p",      "|P_n| = |P_{n-1}| + (n-1)(n-2) |P_{n-2}| on enumerated odd-order counts",       10, 10, 3},
    {CheckId::lemma21,           "lemma21",           "for |i-j| = 1, removing j and n is a bijection onto length n-2 with d-1",       8,  9,  3},
    {CheckId::lemma22,           "lemma22",           "non-ballot delta forces gamma_last > delta_1 and h(omega) != 1",                7,  8,  4},
    {CheckId::thm23_bijection,   "thm23_bijection",   "(alpha,lambda,gamma,delta) -> (gamma',mu,alpha',delta) is a bijection X(lambda) -> X(mu)", 8, 9, 4},
    {CheckId::x_lambda_identity, "x_lambda_identity", "|X(lambda)| = b_n(i,j-1) - b_n(i,j) and |X(mu)| = b_n(j,i) - b_n(j-1,i)",       8,  9,  4},
    {CheckId::phi_bijection,     "phi_bijection",     "exchanging j-1 and j maps B_n(i,j-1) minus X(lambda) onto B_n(i,j)",           8,  9,  4},
    {CheckId::toeplitz_B,        "toeplitz_B",        "B(n,d) is constant along diagonals for every d",                               8,  10, 3},
    {CheckId::toeplitz_P,        "toeplitz_P",        "P(n,d) is constant along diagonals for every d",                               9,  10, 3},
    {CheckId::symmetry_P,        "symmetry_P",        "P(n,d) is symmetric for every d",                                              9,  10, 3},
    {CheckId::T_roundtrip,       "T_roundtrip",       "diagonal shift and its inverse round-trip and preserve descents / cycle data", 8,  9,  4},
    {CheckId::conj_spiro,        "conj_spiro",        "b_{n,d} = p_{n,d} for every d (conjecture)",                                   9,  10, 1},
    {CheckId::conj_refined,      "conj_refined",      "b_{n,d}(1,j) + b_{n,d}(j,1) = 2 p_{n,d}(1,j) (conjecture)",                    8,  10, 3},
    {CheckId::prop41,            "prop41",            "closed forms of b_{n,1}(j,1), b_{n,1}(1,j), p_{n,1}(1,j) and the d = 0 case",  10, 10, 3},
    {CheckId::lemma42,           "lemma42",           "the 2/3 flip is a weight-preserving bijection P_{n,d}(1,2) -> P_{n,d}(1,3)",   9,  9,  4},
    {CheckId::prop43_words,      "prop43_words",      "word-pair counts b_{n,d}(1,23), (23,1), (1,32), (32,1) and their differences", 8,  9,  4},
    {CheckId::eq_bnd_pnd,        "eq_bnd_pnd",        "b_{n,d} = b_{n-1,d} + sum b_{n,d}(i,j), same for p",                           8,  10, 2},
}};
// clang-format on

inline const CheckInfo& info(CheckId id)
{
    return *std::find_if(catalog.begin(), catalog.end(), [&](const CheckInfo& c) { return c.id == id; });
}

inline std::string_view to_string(CheckId id) { return info(id).name; }

inline std::optional<CheckId> parse_check(std::string_view name)
{
    for (const auto& c : catalog) {
        if (c.name == name) {
            return c.id;
        }
    }
    return std::nullopt;
}

inline std::vector<CheckInfo> list_checks() { return {catalog.begin(), catalog.end()}; }

using Value = std::variant<std::int64_t, std::string>;
using Params = std::vector<std::pair<std::string, Value>>;

struct Counterexample {
    Params params;
    Value lhs;
    Value rhs;

    friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Status { pass, fail };

struct VerificationReport {
    CheckId check = CheckId::closed_form;
    int max_n = 0;
    std::uint64_t cells_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::milliseconds wall_time{0};

    [[nodiscard]] Status status() const noexcept
    {
        return counterexamples.empty() ? Status::pass : Status::fail;
    }
    [[nodiscard]] bool passed() const noexcept { return status() == Status::pass; }
};

inline nlohmann::ordered_json to_json(const Value& v)
{
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool with_time = true)
{
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) {
            params[k] = to_json(v);
        }
        cex.push_back({{"params", params}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
    }
    nlohmann::ordered_json j{
        {"check", std::string(to_string(r.check))},
        {"max_n", r.max_n},
        {"cells_checked", r.cells_checked},
        {"status", r.passed() ? "pass" : "fail"},
        {"counterexamples", cex},
    };
    if (with_time) {
        j["wall_time_ms"] = r.wall_time.count();
    }
    return j;
}

} // namespace permlab::verify
