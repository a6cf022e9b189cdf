#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace lct::cli {

namespace {

std::string render_grid(const std::vector<std::string>& row_labels,
                        const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            widths[j] = std::max(widths[j], row[j].size());
        }
    }
    std::size_t label_width = 0;
    for (const auto& label : row_labels) {
        label_width = std::max(label_width, label.size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << row_labels[i] << std::string(label_width - row_labels[i].size(), ' ') << " |";
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            out << ' ' << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_plain(const RawWindow& w) {
    const bool has_tail = w.h1_tail.has_value() || w.h2_slope.has_value();
    std::vector<std::vector<std::string>> cells(4);
    for (int n = w.hi; n >= w.lo; --n) {
        cells[0].push_back(std::to_string(n));
        for (int i = 0; i < 3; ++i) {
            cells[static_cast<std::size_t>(i) + 1].push_back(to_string(w.value(i, n)));
        }
    }
    if (has_tail) {
        cells[0].push_back("...");
        cells[1].push_back("0");
        cells[2].push_back(w.h1_tail ? to_string(*w.h1_tail) : "0");
        cells[3].push_back(w.h2_slope ? "..." : "0");
    }
    return render_grid({"n ", "h0", "h1", "h2"}, cells);
}

std::string render_plain(const MPoint& p) {
    auto hull = p.support_hull();
    if (!hull) {
        return "0\n";
    }
    std::vector<std::vector<std::string>> cells(4);
    for (int n = hull->second; n >= hull->first; --n) {
        cells[0].push_back(std::to_string(n));
        for (int i = 0; i < 3; ++i) {
            cells[static_cast<std::size_t>(i) + 1].push_back(to_string(p.value(i, n)));
        }
    }
    return render_grid({"n ", "D0", "D1", "D2"}, cells);
}

}  // namespace lct::cli
