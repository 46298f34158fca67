#pragma once

#include <string>
#include <vector>

namespace lingwalk {

/// Parsed form of the experiment CSVs (no quoting in this dialect).
struct CsvTable {
    std::string experiment;                       // tag from "# lingwalk v1 <tag>"
    std::vector<std::string> columns;             // header row
    std::vector<std::vector<std::string>> rows;   // data cells as text

    int column_index(const std::string& name) const;  // -1 when absent
};

/// Throws std::invalid_argument on missing header, ragged rows or empty body.
CsvTable parse_csv(const std::string& text);

/// 17-significant-digit rendering used in all CSV output.
std::string format_double(double value);

}  // namespace lingwalk
