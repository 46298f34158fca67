#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingwalk/analysis.hpp"
#include "lingwalk/builders.hpp"

namespace lingwalk {

/// Probabilities after the prescribed steps, plus fidelity to the walk's
/// accepting state (spatial: uniform accept superposition; sequential: the
/// final state of the reference word of the input's length, run on the same
/// walk; absent when no reference word exists).
struct RunResult {
    double p_accept = 0.0;
    double p_reject = 0.0;
    double p_elsewhere = 0.0;
    std::optional<double> fidelity;
};

RunResult run_input(const Walk& walk, const QuantumWord& input);
RunResult run_word(const Walk& walk, std::string_view word);

/// The state fidelity in RunResult is measured against.
ArcState accepting_state(const Walk& walk, int input_length);

// ---------------------------------------------------------------------------
// Experiments. All deterministic; rows come back in a fixed order and the
// CSV renderings are byte-stable.
// ---------------------------------------------------------------------------

struct FidelityRow {
    int index = 0;  // 1-based position in enumeration order
    std::string word;
    int length = 0;
    double fidelity = 0.0;
    double jaro = 0.0;
    double acceptance = 0.0;
    bool in_language = false;
};

/// One row per enumerated string: run it on the walk for its length, compare
/// the final state to the accepting state and the string to the reference
/// word. Spatial walks take even lengths only; odd-length strings run on the
/// next even length's walk with the extra position left dark, which keeps
/// them strictly below fidelity 1.
std::vector<FidelityRow> exp_fidelity_curve(const Language& language, WalkMode mode, int count);

struct QuantumInputRow {
    double theta = 0.0;
    std::string other;
    int match_count = 0;
    double fidelity = 0.0;
};

/// For every other string of |base|'s length and each theta on the uniform
/// grid over [0, pi/2], run the spatial walk for `base` on
/// superpose_words(base, other, theta). Base length must be even.
std::vector<QuantumInputRow> exp_quantum_input(const std::string& base, int grid_size);

struct BoundsRow {
    std::string mode;
    int n = 0;
    std::string target;      // "-" when the length has no in-language word
    int nonword_count = 0;
    double max_accept = 0.0;
    std::string argmax_word;
    double paper_claim = 0.0;
    bool claim_met = false;
};

/// Exhaustive worst-case non-word acceptance per length, reported beside the
/// claimed bound (2/n^2 spatial, 1/2 sequential). claim_met is data, never an
/// assertion. max_len > 14 is refused (2^n sweep budget).
std::vector<BoundsRow> exp_bound_sweep(const Language& language, WalkMode mode, int max_len);

struct ResourceRow {
    int n = 0;
    std::string mode;
    int nodes = 0;  // spatial: total; sequential rows: nodes beyond the rail
    int steps = 0;
    std::optional<int> paper_nodes;
    std::optional<int> paper_steps;
};

std::vector<ResourceRow> exp_resources(int max_len);

struct DiscriminationRow {
    double theta = 0.0;
    double p_accept_1 = 0.0;
    double p_accept_2 = 0.0;
    double success = 0.0;
};

/// At each theta, state 1 = superpose(w1, w2, theta) and state 2 =
/// superpose(w2, w1, theta) run on the spatial walk for w1; success is the
/// one-shot discrimination probability from the accept outcome.
std::vector<DiscriminationRow> exp_discriminate(const std::string& w1, const std::string& w2,
                                                int grid_size);

// CSV renderings, header comment "# lingwalk v1 <experiment>", 17 significant
// digits, '.' decimal point.
std::string to_csv(const std::vector<FidelityRow>& rows, const std::string& tag);
std::string to_csv(const std::vector<QuantumInputRow>& rows);
std::string to_csv(const std::vector<BoundsRow>& rows);
std::string to_csv(const std::vector<ResourceRow>& rows);
std::string to_csv(const std::vector<DiscriminationRow>& rows);

}  // namespace lingwalk
