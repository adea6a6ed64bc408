#pragma once

// On-disk store for count tables, one text file per (kind, n).

#include "permlab/counts.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace permlab::cli {

inline constexpr int cache_format_version = 1;

inline std::uint64_t fnv1a(std::string_view data) noexcept
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }

    [[nodiscard]] std::filesystem::path path_for(Kind kind, int n) const
    {
        return dir_ / (std::string(to_string(kind)) + "-n" + std::to_string(n) + ".v"
                       + std::to_string(cache_format_version) + ".table");
    }

    static std::string serialize(const CountTable& t)
    {
        std::ostringstream body;
        body << "permlab-count-table " << cache_format_version << '\n'
             << "kind " << to_string(t.kind()) << '\n'
             << "n " << t.n() << '\n'
             << "totals";
        for (auto x : t.totals()) {
            body << ' ' << x;
        }
        body << "\ncells";
        for (auto x : t.cells()) {
            body << ' ' << x;
        }
        body << '\n';
        const std::string payload = body.str();
        std::ostringstream out;
        out << payload << "checksum " << std::hex << std::setw(16) << std::setfill('0') << fnv1a(payload) << '\n';
        return out.str();
    }

    /// Parses a serialized table; nothing when the text is malformed, mismatched or fails its checksum.
    static std::optional<CountTable> deserialize(const std::string& text, Kind kind, int n)
    {
        const auto cut = text.rfind("checksum ");
        if (cut == std::string::npos) {
            return std::nullopt;
        }
        const std::string payload = text.substr(0, cut);
        std::istringstream tail(text.substr(cut + 9));
        std::uint64_t stored = 0;
        if (!(tail >> std::hex >> stored) || stored != fnv1a(payload)) {
            return std::nullopt;
        }
        std::istringstream in(payload);
        std::string word;
        int version = 0;
        std::string kind_name;
        int stored_n = 0;
        if (!(in >> word >> version) || word != "permlab-count-table" || version != cache_format_version) {
            return std::nullopt;
        }
        if (!(in >> word >> kind_name) || word != "kind" || kind_name != to_string(kind)) {
            return std::nullopt;
        }
        if (!(in >> word >> stored_n) || word != "n" || stored_n != n) {
            return std::nullopt;
        }
        CountTable table(kind, n);
        std::vector<Count> totals;
        std::vector<Count> cells;
        std::string line;
        std::getline(in, line);
        for (auto* target : {&totals, &cells}) {
            if (!std::getline(in, line)) {
                return std::nullopt;
            }
            std::istringstream ls(line);
            ls >> word;
            Count x = 0;
            while (ls >> x) {
                target->push_back(x);
            }
        }
        if (totals.size() != table.totals().size() || cells.size() != table.cells().size()) {
            return std::nullopt;
        }
        table.assign(std::move(totals), std::move(cells));
        return table;
    }

    [[nodiscard]] std::shared_ptr<const CountTable> load(Kind kind, int n) const
    {
        std::ifstream in(path_for(kind, n), std::ios::binary);
        if (!in) {
            return nullptr;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        auto table = deserialize(ss.str(), kind, n);
        return table ? std::make_shared<const CountTable>(std::move(*table)) : nullptr;
    }

    /// Writes to a temporary sibling, then renames over the final name.
    void save(const CountTable& t) const
    {
        std::filesystem::create_directories(dir_);
        const auto final_path = path_for(t.kind(), t.n());
        std::random_device rd;
        auto tmp = final_path;
        tmp += ".tmp" + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << serialize(t);
            if (!out) {
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                return;
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
        }
    }

    void attach(CountMemo& memo) const
    {
        memo.set_persistence([self = *this](Kind k, int n) { return self.load(k, n); },
                             [self = *this](const CountTable& t) { self.save(t); });
    }

private:
    std::filesystem::path dir_;
};

} // namespace permlab::cli
