#include "lingwalk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "lingwalk/csv.hpp"

namespace lingwalk {

namespace {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

const char* kPalette[] = {"#000000", "#cc0000", "#1f77b4", "#2ca02c",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double cell_number(const std::string& cell) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("trailing text");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("svg: non-numeric cell '" + cell + "'");
    }
}

/// Match-count coloring mirrors the four-curve grouping: 0 blue, 1 green,
/// 2 black, 3 red.
std::string match_color(int match_count) {
    switch (match_count) {
        case 0:
            return "#1f77b4";
        case 1:
            return "#2ca02c";
        case 2:
            return "#000000";
        case 3:
            return "#cc0000";
        default:
            return kPalette[(match_count + 4) % 8];
    }
}

std::vector<Series> extract_series(const CsvTable& csv) {
    std::vector<Series> series;
    const auto numeric_series = [&](const std::string& x_col,
                                    const std::vector<std::string>& y_cols) {
        const int xi = csv.column_index(x_col);
        if (xi < 0) throw std::invalid_argument("svg: missing column " + x_col);
        int color = 0;
        for (const std::string& y_col : y_cols) {
            const int yi = csv.column_index(y_col);
            if (yi < 0) throw std::invalid_argument("svg: missing column " + y_col);
            Series s{y_col, kPalette[color++ % 8], {}};
            for (const auto& row : csv.rows) {
                if (row[static_cast<std::size_t>(yi)].empty()) continue;  // blank cell: no point
                s.points.emplace_back(cell_number(row[static_cast<std::size_t>(xi)]),
                                      cell_number(row[static_cast<std::size_t>(yi)]));
            }
            series.push_back(std::move(s));
        }
    };

    if (csv.experiment == "fig2" || csv.experiment == "fig4") {
        numeric_series("index", {"fidelity", "jaro"});
        series[0].color = "#000000";
        series[1].color = "#cc0000";
    } else if (csv.experiment == "fig5") {
        const int xi = csv.column_index("theta");
        const int si = csv.column_index("other_string");
        const int mi = csv.column_index("match_count");
        const int yi = csv.column_index("fidelity");
        if (xi < 0 || si < 0 || mi < 0 || yi < 0)
            throw std::invalid_argument("svg: fig5 columns missing");
        std::map<std::string, Series> by_string;
        for (const auto& row : csv.rows) {
            const std::string& key = row[static_cast<std::size_t>(si)];
            Series& s = by_string[key];
            if (s.points.empty()) {
                const int match =
                    static_cast<int>(cell_number(row[static_cast<std::size_t>(mi)]));
                s.label = std::to_string(match) + " matching";
                s.color = match_color(match);
            }
            s.points.emplace_back(cell_number(row[static_cast<std::size_t>(xi)]),
                                  cell_number(row[static_cast<std::size_t>(yi)]));
        }
        for (auto& [key, s] : by_string) series.push_back(std::move(s));
    } else if (csv.experiment == "discriminate") {
        numeric_series("theta", {"p_accept_1", "p_accept_2", "success"});
    } else if (csv.experiment == "bounds") {
        // One pair of lines per mode present.
        const int mi = csv.column_index("mode");
        const int xi = csv.column_index("n");
        const int yi = csv.column_index("max_accept");
        const int ci = csv.column_index("paper_claim");
        if (mi < 0 || xi < 0 || yi < 0 || ci < 0)
            throw std::invalid_argument("svg: bounds columns missing");
        std::map<std::string, std::pair<Series, Series>> by_mode;
        for (const auto& row : csv.rows) {
            const std::string& mode = row[static_cast<std::size_t>(mi)];
            auto [it, inserted] = by_mode.try_emplace(mode);
            if (inserted) {
                const std::size_t base = 2 * (by_mode.size() - 1);
                it->second.first = {mode + " max_accept", kPalette[base % 8], {}};
                it->second.second = {mode + " paper_claim", kPalette[(base + 1) % 8], {}};
            }
            const double x = cell_number(row[static_cast<std::size_t>(xi)]);
            it->second.first.points.emplace_back(
                x, cell_number(row[static_cast<std::size_t>(yi)]));
            it->second.second.points.emplace_back(
                x, cell_number(row[static_cast<std::size_t>(ci)]));
        }
        for (auto& [mode, pair] : by_mode) {
            series.push_back(std::move(pair.first));
            series.push_back(std::move(pair.second));
        }
    } else if (csv.experiment == "resources") {
        const int mi = csv.column_index("mode");
        const int xi = csv.column_index("n");
        const int yi = csv.column_index("nodes");
        if (mi < 0 || xi < 0 || yi < 0)
            throw std::invalid_argument("svg: resources columns missing");
        std::map<std::string, Series> by_mode;
        for (const auto& row : csv.rows) {
            const std::string& mode = row[static_cast<std::size_t>(mi)];
            Series& s = by_mode[mode];
            if (s.points.empty()) {
                s.label = mode + " nodes";
                s.color = kPalette[(by_mode.size() - 1) % 8];
            }
            s.points.emplace_back(cell_number(row[static_cast<std::size_t>(xi)]),
                                  cell_number(row[static_cast<std::size_t>(yi)]));
        }
        for (auto& [mode, s] : by_mode) series.push_back(std::move(s));
    } else {
        throw std::invalid_argument("svg: unknown experiment tag '" + csv.experiment + "'");
    }
    return series;
}

}  // namespace

std::string render_svg(const std::string& csv_text) {
    const CsvTable csv = parse_csv(csv_text);
    const std::vector<Series> series = extract_series(csv);
    if (series.empty()) throw std::invalid_argument("svg: no series");

    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (first) throw std::invalid_argument("svg: no points");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double width = 800, height = 600;
    const double left = 70, right = 20, top = 20, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double y) {
        return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(plot_w) +
           "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // Ticks and labels.
    for (int i = 0; i <= 4; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 4.0;
        const double fy = y_min + (y_max - y_min) * i / 4.0;
        char label[40];
        out += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(top + plot_h) + "\" x2=\"" +
               fmt(px(fx)) + "\" y2=\"" + fmt(top + plot_h + 5) + "\" stroke=\"#333333\"/>\n";
        std::snprintf(label, sizeof(label), "%.4g", fx);
        out += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(top + plot_h + 20) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" + label +
               "</text>\n";
        out += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" +
               fmt(left) + "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"#333333\"/>\n";
        std::snprintf(label, sizeof(label), "%.4g", fy);
        out += "<text x=\"" + fmt(left - 8) + "\" y=\"" + fmt(py(fy) + 4) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + label +
               "</text>\n";
    }

    for (const Series& s : series) {
        if (s.points.empty()) continue;
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1\" points=\"";
        for (const auto& [x, y] : s.points) out += fmt(px(x)) + "," + fmt(py(y)) + " ";
        out.pop_back();
        out += "\"/>\n";
    }

    // Legend, deduplicated by label (fig5's per-string series share class labels).
    std::vector<std::pair<std::string, std::string>> legend;  // (label, color)
    for (const Series& s : series) {
        bool seen = false;
        for (const auto& [label, color] : legend)
            if (label == s.label) seen = true;
        if (!seen) legend.emplace_back(s.label, s.color);
    }
    double ly = top + 12;
    for (const auto& [label, color] : legend) {
        out += "<line x1=\"" + fmt(left + plot_w - 150) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" +
               fmt(left + plot_w - 130) + "\" y2=\"" + fmt(ly - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(left + plot_w - 125) + "\" y=\"" + fmt(ly) +
               "\" font-family=\"monospace\" font-size=\"12\">" + label + "</text>\n";
        ly += 16;
    }

    out += "</svg>\n";
    return out;
}

}  // namespace lingwalk
