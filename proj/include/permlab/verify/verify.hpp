#pragma once

#include "permlab/verify/checks.hpp"
#include "permlab/verify/report.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace permlab::verify {

/// Runs every catalogued check, each at `max_n` if given or at its default budget otherwise.
inline std::vector<VerificationReport> run_all(std::optional<int> max_n = std::nullopt, const RunOptions& options = {})
{
    std::vector<VerificationReport> out;
    for (const auto& c : catalog) {
        out.push_back(max_n ? run_check(c.id, *max_n, options) : run_check(c.id, options));
    }
    return out;
}

inline std::string format_value(const Value& v)
{
    if (const auto* s = std::get_if<std::string>(&v)) {
        return *s;
    }
    return std::to_string(std::get<std::int64_t>(v));
}

/// One summary line, then one indented line per counterexample.
inline void write_text(std::ostream& os, const VerificationReport& r, bool with_time = true)
{
    os << to_string(r.check) << " max_n=" << r.max_n << " cells=" << r.cells_checked << ' '
       << (r.passed() ? "pass" : "fail");
    if (!r.passed()) {
        os << " counterexamples=" << r.counterexamples.size();
    }
    if (with_time) {
        os << " time_ms=" << r.wall_time.count();
    }
    os << '\n';
    for (const auto& c : r.counterexamples) {
        os << " ";
        for (const auto& [k, v] : c.params) {
            os << ' ' << k << '=' << format_value(v);
        }
        os << " : " << format_value(c.lhs) << " vs " << format_value(c.rhs) << '\n';
    }
}

} // namespace permlab::verify
