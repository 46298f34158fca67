#include "lingwalk/quantum_word.hpp"

#include <cmath>
#include <stdexcept>

#include "lingwalk/languages.hpp"

namespace lingwalk {

namespace {
constexpr double kPositionNormTol = 1e-12;
}

QuantumWord::QuantumWord(std::vector<SymbolWeights> positions)
    : positions_(std::move(positions)) {
    for (const SymbolWeights& p : positions_) {
        const double norm = std::norm(p.a) + std::norm(p.b);
        if (std::abs(norm - 1.0) > kPositionNormTol)
            throw std::invalid_argument("quantum word: position weights are not normalized");
    }
}

QuantumWord QuantumWord::classical(std::string_view word) {
    std::vector<SymbolWeights> positions;
    positions.reserve(word.size());
    for (char c : word) {
        if (c == 'a')
            positions.push_back({{1.0, 0.0}, {0.0, 0.0}});
        else if (c == 'b')
            positions.push_back({{0.0, 0.0}, {1.0, 0.0}});
        else
            throw std::invalid_argument("quantum word: alphabet is {a, b}");
    }
    return QuantumWord(std::move(positions));
}

bool QuantumWord::is_classical() const {
    for (const SymbolWeights& p : positions_) {
        const double wa = std::norm(p.a);
        const double wb = std::norm(p.b);
        if (std::abs(wa - 1.0) > kPositionNormTol && std::abs(wb - 1.0) > kPositionNormTol)
            return false;
    }
    return true;
}

std::string QuantumWord::to_word() const {
    std::string w;
    w.reserve(positions_.size());
    for (const SymbolWeights& p : positions_) {
        const double wa = std::norm(p.a);
        if (std::abs(wa - 1.0) <= kPositionNormTol)
            w += 'a';
        else if (std::abs(std::norm(p.b) - 1.0) <= kPositionNormTol)
            w += 'b';
        else
            throw std::logic_error("quantum word: not classical");
    }
    return w;
}

QuantumWord superpose_words(std::string_view w1, std::string_view w2, double theta) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("superpose_words: lengths differ");
    if (!is_binary_word(w1) || !is_binary_word(w2))
        throw std::invalid_argument("superpose_words: alphabet is {a, b}");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<SymbolWeights> positions(w1.size());
    for (std::size_t j = 0; j < w1.size(); ++j) {
        SymbolWeights& p = positions[j];
        if (w1[j] == w2[j]) {
            (w1[j] == 'a' ? p.a : p.b) = 1.0;
        } else {
            (w1[j] == 'a' ? p.a : p.b) = c;
            (w2[j] == 'a' ? p.a : p.b) = s;
        }
    }
    return QuantumWord(std::move(positions));
}

}  // namespace lingwalk
