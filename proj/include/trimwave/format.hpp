#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trimwave {

/// Shortest decimal that round-trips the value (at most 17 significant
/// digits), the pinned format for every CSV/JSON artifact.
std::string format_double(double v);

/// FNV-1a 64-bit; used for config and artifact checksums.
std::uint64_t fnv1a64(std::string_view data);

std::string hex64(std::uint64_t v);

/// Minimal CSV assembly with a fixed header; cells are preformatted strings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace trimwave
