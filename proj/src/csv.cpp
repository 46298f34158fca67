#include "lingwalk/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace lingwalk {

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prefix = "# lingwalk v1 ";
            if (line.rfind(prefix, 0) == 0) table.experiment = line.substr(prefix.size());
            continue;
        }
        if (!saw_header) {
            table.columns = split_cells(line);
            saw_header = true;
            continue;
        }
        std::vector<std::string> cells = split_cells(line);
        if (cells.size() != table.columns.size())
            throw std::invalid_argument("csv: ragged row");
        table.rows.push_back(std::move(cells));
    }
    if (!saw_header) throw std::invalid_argument("csv: missing header row");
    if (table.rows.empty()) throw std::invalid_argument("csv: no data rows");
    return table;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace lingwalk
