#include "celebnet/markdown.hpp"

#include <algorithm>

namespace celebnet {

std::string markdown_table(const std::vector<std::string>& headers,
                           const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(headers.size(), 3);
    for (std::size_t c = 0; c < headers.size(); ++c) {
        widths[c] = std::max(widths[c], headers[c].size());
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }

    auto emit_row = [&](const std::vector<std::string>& cells) {
        std::string line = "|";
        for (std::size_t c = 0; c < widths.size(); ++c) {
            const std::string& cell = c < cells.size() ? cells[c] : std::string{};
            line += " " + cell + std::string(widths[c] - cell.size(), ' ') + " |";
        }
        return line + "\n";
    };

    std::string out = emit_row(headers);
    std::string rule = "|";
    for (std::size_t c = 0; c < widths.size(); ++c) {
        rule += " " + std::string(widths[c], '-') + " |";
    }
    out += rule + "\n";
    for (const auto& row : rows) {
        out += emit_row(row);
    }
    return out;
}

} // namespace celebnet
