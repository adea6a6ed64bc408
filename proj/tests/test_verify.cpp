#include "permlab/verify/verify.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace permlab;
using namespace permlab::verify;

TEST_CASE("catalog")
{
    const auto all = list_checks();
    CHECK(all.size() == 18);
    CHECK(info(CheckId::conj_spiro).default_max_n == 9);
    CHECK(info(CheckId::thm23_bijection).default_max_n == 8);
    for (const auto& c : all) {
        CHECK(parse_check(c.name) == c.id);
        CHECK(c.min_n <= c.default_max_n);
        CHECK(c.default_max_n <= c.budget_max_n);
        CHECK_FALSE(c.description.empty());
    }
    CHECK_FALSE(parse_check("lemma99").has_value());
}

TEST_CASE("examples from the check descriptions")
{
    const auto t = run_check(CheckId::toeplitz_B, 7);
    CHECK(t.passed());
    CHECK(t.cells_checked > 0);

    const auto r = run_check(CheckId::conj_refined, 7);
    CHECK(r.status() == Status::pass);
    CHECK(r.counterexamples.empty());

    const auto c = run_check(CheckId::closed_form, 8);
    CHECK(c.passed());
    CHECK(count(Kind::ballot, CountKey{8, {}, {}, {}}) == 11025);
}

TEST_CASE("checks other than the word-pair reduction pass at their default budgets")
{
    for (const auto& c : catalog) {
        if (c.id == CheckId::prop43_words) {
            continue;
        }
        const auto report = run_check(c.id);
        INFO(c.name);
        CHECK(report.max_n == c.default_max_n);
        CHECK(report.cells_checked > 0);
        CHECK(report.passed());
        if (!report.passed()) {
            std::ostringstream os;
            write_text(os, report);
            FAIL_CHECK(os.str());
        }
    }
}

TEST_CASE("word-pair check reports the cells where the reduction to length n-3 fails")
{
    const auto report = run_check(CheckId::prop43_words, 8);
    CHECK(report.status() == Status::fail);
    const Counterexample first{{{"n", 5}, {"d", 2}, {"identity", "b(1,32) = b_{n-3,d-2}"}}, std::int64_t{0},
                               std::int64_t{1}};
    CHECK(std::find(report.counterexamples.begin(), report.counterexamples.end(), first)
          != report.counterexamples.end());
    for (const auto& c : report.counterexamples) {
        const auto& identity = std::get<std::string>(c.params.at(2).second);
        // The difference identities obtained by exchanging 2 and 3 hold everywhere.
        CHECK(identity.find(" - ") == std::string::npos);
    }
    CHECK(std::is_sorted(report.counterexamples.begin(), report.counterexamples.end()));
}

TEST_CASE("budget and domain errors happen before any work")
{
    CHECK_THROWS_AS(run_check(CheckId::lemma22, 9), BudgetError);
    CHECK_THROWS_AS(run_check(CheckId::closed_form, 11), BudgetError);
    CHECK_THROWS_AS(run_check(CheckId::T_roundtrip, 3), DomainError);
    RunOptions bigger;
    bigger.budget_override = 9;
    CHECK(run_check(CheckId::lemma22, 8, bigger).passed());
}

TEST_CASE("reports are deterministic up to wall time")
{
    CountMemo fresh;
    RunOptions opts;
    opts.memo = &fresh;
    const auto a = to_json(run_check(CheckId::prop43_words, 7, opts), false).dump();
    const auto b = to_json(run_check(CheckId::prop43_words, 7), false).dump();
    CHECK(a == b);
}

TEST_CASE("JSON report schema")
{
    const auto j = to_json(run_check(CheckId::prop43_words, 6));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"check", "max_n", "cells_checked", "status", "counterexamples", "wall_time_ms"});
    CHECK(j["check"] == "prop43_words");
    CHECK(j["status"] == "fail");
    const auto& first = j["counterexamples"].at(0);
    CHECK(first["params"]["n"] == 5);
    CHECK(first["lhs"] == 0);
    CHECK(first["rhs"] == 1);
    CHECK_FALSE(to_json(run_check(CheckId::closed_form, 3), false).contains("wall_time_ms"));
}
