#pragma once

#include <string_view>
#include <vector>

#include "lingwalk/coins.hpp"

namespace lingwalk {

/// Weights of one input position on the two symbols.
struct SymbolWeights {
    Amplitude a{0.0, 0.0};
    Amplitude b{0.0, 0.0};
};

/// Per-position superposition over {a, b}. Positions are unit-normalized
/// (|a|^2 + |b|^2 = 1 to 1e-12); encoders scale every position by the mode's
/// normalization so the encoded state has norm 1.
class QuantumWord {
public:
    QuantumWord() = default;
    /// Validates per-position normalization; throws on violation.
    explicit QuantumWord(std::vector<SymbolWeights> positions);

    static QuantumWord classical(std::string_view word);

    int length() const { return static_cast<int>(positions_.size()); }
    const std::vector<SymbolWeights>& positions() const { return positions_; }
    const SymbolWeights& at(int position) const { return positions_.at(position); }

    /// True when every position is exactly (1,0) or (0,1).
    bool is_classical() const;
    /// The classical word, when is_classical().
    std::string to_word() const;

private:
    std::vector<SymbolWeights> positions_;
};

/// Positions where w1 and w2 agree keep full weight on the shared symbol;
/// positions where they differ get cos(theta) on w1's symbol and sin(theta)
/// on w2's. theta = 0 is w1, theta = pi/2 is w2. Lengths must match.
QuantumWord superpose_words(std::string_view w1, std::string_view w2, double theta);

}  // namespace lingwalk
