#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lingwalk/languages.hpp"
#include "lingwalk/state.hpp"

namespace lingwalk {

/// |<phi|psi>|^2. Throws on dimension mismatch.
double fidelity(const ArcState& psi, const ArcState& phi);

/// Jaro similarity in [0, 1]: 0 when there are no matching characters, else
/// (m/|w1| + m/|w2| + (m-t)/m) / 3 with the standard window
/// floor(max(|w1|,|w2|)/2) - 1 and t = half the out-of-order matches.
double jaro(std::string_view w1, std::string_view w2);

/// First k strings over {a, b}, ordered by length then lexicographically
/// with a < b: a, b, aa, ab, ba, bb, aaa, ...
std::vector<std::string> enumerate_strings(int k);

struct AcceptanceRecord {
    std::string word;
    bool in_language = false;
    double acceptance_probability = 0.0;
    double fidelity = 0.0;
    double jaro = 0.0;
};

struct CutpointResult {
    double lambda = 0.0;   // midpoint of the separation gap
    double epsilon = 0.0;  // half the gap; > 0 means bounded error
    bool bounded = false;
};

/// lambda = midpoint between the highest out-of-language acceptance and the
/// lowest in-language acceptance; epsilon = half that gap. Throws unless both
/// classes are present.
CutpointResult cutpoint_margin(const std::vector<AcceptanceRecord>& records);

/// Success probability of the best decision rule on a single accept/reject
/// outcome under equal priors: (1 + |pA - pB|) / 2. Throws on probabilities
/// outside [0, 1].
double discrimination_success(double p_accept_a, double p_accept_b);

}  // namespace lingwalk
