#include "lingwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lingwalk {

double fidelity(const ArcState& psi, const ArcState& phi) {
    if (psi.dim() != phi.dim()) throw std::invalid_argument("fidelity: state dimensions differ");
    return std::norm(inner_product(phi, psi));
}

double jaro(std::string_view w1, std::string_view w2) {
    const std::size_t len1 = w1.size();
    const std::size_t len2 = w2.size();
    if (len1 == 0 && len2 == 0) return 0.0;  // m = 0 branch

    const std::size_t window =
        std::max(len1, len2) / 2 > 0 ? std::max(len1, len2) / 2 - 1 : 0;
    std::vector<bool> matched1(len1, false), matched2(len2, false);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(i + window + 1, len2);
        for (std::size_t j = lo; j < hi; ++j) {
            if (matched2[j] || w1[i] != w2[j]) continue;
            matched1[i] = matched2[j] = true;
            ++matches;
            break;
        }
    }
    if (matches == 0) return 0.0;

    // Transpositions: matching characters in different sequence order, / 2.
    std::size_t out_of_order = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        if (!matched1[i]) continue;
        while (!matched2[k]) ++k;
        if (w1[i] != w2[k]) ++out_of_order;
        ++k;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(out_of_order) / 2.0;
    return (m / static_cast<double>(len1) + m / static_cast<double>(len2) + (m - t) / m) / 3.0;
}

std::vector<std::string> enumerate_strings(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_strings: count must be >= 1");
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int length = 1; static_cast<int>(out.size()) < k; ++length) {
        const std::uint64_t block = 1ull << length;
        for (std::uint64_t bits = 0; bits < block && static_cast<int>(out.size()) < k; ++bits) {
            std::string w(static_cast<std::size_t>(length), 'a');
            for (int i = 0; i < length; ++i)
                if (bits >> (length - 1 - i) & 1) w[static_cast<std::size_t>(i)] = 'b';
            out.push_back(std::move(w));
        }
    }
    return out;
}

CutpointResult cutpoint_margin(const std::vector<AcceptanceRecord>& records) {
    if (records.empty()) throw std::invalid_argument("cutpoint_margin: no records");
    bool any_in = false, any_out = false;
    double min_in = 1.0, max_out = 0.0;
    for (const AcceptanceRecord& r : records) {
        if (r.in_language) {
            any_in = true;
            min_in = std::min(min_in, r.acceptance_probability);
        } else {
            any_out = true;
            max_out = std::max(max_out, r.acceptance_probability);
        }
    }
    if (!any_in || !any_out)
        throw std::invalid_argument("cutpoint_margin: both classes must be present");
    CutpointResult result;
    result.lambda = (max_out + min_in) / 2.0;
    result.epsilon = (min_in - max_out) / 2.0;
    result.bounded = result.epsilon > 0.0;
    return result;
}

double discrimination_success(double p_accept_a, double p_accept_b) {
    const auto in_range = [](double p) { return p >= -1e-12 && p <= 1.0 + 1e-12; };
    if (!in_range(p_accept_a) || !in_range(p_accept_b))
        throw std::invalid_argument("discrimination_success: probability outside [0, 1]");
    return 0.5 * (1.0 + std::abs(p_accept_a - p_accept_b));
}

}  // namespace lingwalk
