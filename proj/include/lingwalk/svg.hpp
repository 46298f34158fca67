#pragma once

#include <string>

namespace lingwalk {

/// Deterministic 800x600 line chart for a "# lingwalk v1 <experiment>" CSV.
/// The experiment tag picks the series layout (fig2/fig4: fidelity black,
/// jaro red vs index; fig5: one polyline per string, colored by match count;
/// discriminate/bounds/resources: one polyline per numeric series). Same
/// input produces identical bytes. Throws on malformed or empty CSV.
std::string render_svg(const std::string& csv_text);

}  // namespace lingwalk
