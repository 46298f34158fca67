// Acceptance suite: one pass/fail line per criterion. Run with no arguments
// for all criteria, or with a criterion number (1-10) for a single one.
// Exit code is the number of failing criteria among those run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lingwalk/csv.hpp"
#include "lingwalk/engine.hpp"
#include "lingwalk/experiments.hpp"
#include "lingwalk/svg.hpp"

using namespace lingwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && pass) {
            pass = false;
            detail = message;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> all_words(int length) {
    std::vector<std::string> out;
    out.reserve(1ull << length);
    for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
        std::string w(static_cast<std::size_t>(length), 'a');
        for (int i = 0; i < length; ++i)
            if (bits >> (length - 1 - i) & 1) w[static_cast<std::size_t>(i)] = 'b';
        out.push_back(std::move(w));
    }
    return out;
}

double max_step_norm_drift(const Walk& walk, const ArcState& initial) {
    ArcState psi = initial;
    double worst = std::abs(psi.norm_sq() - 1.0);
    for (int t = 0; t < walk.steps(); ++t) {
        psi = evolve(walk, std::move(psi), 1);
        worst = std::max(worst, std::abs(psi.norm_sq() - 1.0));
    }
    return worst;
}

// 1. Per-step norm drift < 1e-12 across every built walk family; < 10 s.
Outcome criterion_unitarity() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;

    for (int n = 2; n <= 12; n += 2) {
        for (const Language& language : {Language::eq(), Language::ab()}) {
            const Walk walk = build_spatial(language, n);
            const ArcState psi =
                encode_spatial(walk, QuantumWord::classical(*target_word(language, n)));
            worst = std::max(worst, max_step_norm_drift(walk, psi));
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (const Language& language : {Language::eq(), Language::ab()}) {
            const Walk walk = build_sequential(language, n);
            const std::string probe = all_words(n)[static_cast<std::size_t>(n % (1 << n))];
            const ArcState psi = encode_sequential(walk, QuantumWord::classical(probe));
            worst = std::max(worst, max_step_norm_drift(walk, psi));
        }
    }
    for (int len = 1; len <= 6; ++len) {
        for (const std::string& word : all_words(len)) {
            const Walk spatial = build_spatial(Language::specific(word), len);
            worst = std::max(worst, max_step_norm_drift(
                                        spatial, encode_spatial(spatial,
                                                                QuantumWord::classical(word))));
            const Walk sequential = build_sequential_word(word);
            worst = std::max(
                worst, max_step_norm_drift(
                           sequential, encode_sequential(sequential,
                                                         QuantumWord::classical(word))));
        }
    }

    const double elapsed = seconds_since(start);
    out.require(worst < 1e-12, "norm drift " + format_double(worst));
    out.require(elapsed < 10.0, "runtime " + format_double(elapsed) + " s exceeds 10 s");
    out.detail = "max drift " + format_double(worst) + ", " + format_double(elapsed) + " s";
    return out;
}

// 2. Grover transmission for every even d <= 12 and every half-subset.
Outcome criterion_grover_transmission() {
    Outcome out;
    double worst = 0.0;
    for (int d = 2; d <= 12; d += 2) {
        const CoinMatrix g = grover_coin(d);
        const int half = d / 2;
        const double amp = 1.0 / std::sqrt(static_cast<double>(half));
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            if (__builtin_popcount(mask) != half) continue;
            std::vector<Amplitude> in(static_cast<std::size_t>(d)), coined(
                                                                       static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                if (mask >> i & 1) in[static_cast<std::size_t>(i)] = amp;
            for (int i = 0; i < d; ++i) {
                Amplitude acc{0.0, 0.0};
                for (int j = 0; j < d; ++j) acc += g.at(i, j) * in[static_cast<std::size_t>(j)];
                coined[static_cast<std::size_t>(i)] = acc;
            }
            for (int i = 0; i < d; ++i) {
                const bool loaded = (mask >> i & 1) != 0;
                const double residual =
                    std::abs(coined[static_cast<std::size_t>(i)] - (loaded ? 0.0 : amp));
                worst = std::max(worst, residual);
            }
        }
    }
    out.require(worst < 1e-12, "transmission residual " + format_double(worst));
    out.detail = "max residual " + format_double(worst);
    return out;
}

// 3. In-language certainty across both modes and languages.
Outcome criterion_certainty() {
    Outcome out;
    double worst_gap = 0.0;
    for (int n = 2; n <= 12; n += 2) {
        for (const Language& language : {Language::eq(), Language::ab()}) {
            const Walk walk = build_spatial(language, n);
            if (walk.steps() != 3) out.require(false, "spatial walk not 3 steps");
            const double p = run_word(walk, *target_word(language, n)).p_accept;
            worst_gap = std::max(worst_gap, std::abs(p - 1.0));
        }
    }
    for (int m = 1; m <= 4; ++m) {
        for (const Language& language : {Language::eq(), Language::ab()}) {
            const Walk walk = build_sequential(language, 2 * m);
            const double p = run_word(walk, *target_word(language, 2 * m)).p_accept;
            worst_gap = std::max(worst_gap, std::abs(p - 1.0));
        }
    }
    out.require(worst_gap < 1e-9, "certainty gap " + format_double(worst_gap));
    out.detail = "max |p - 1| = " + format_double(worst_gap);
    return out;
}

// 4. Spatial closed form (n-k)^2/n^2 for all 2^n inputs, n in {2,4,6,8}.
Outcome criterion_spatial_closed_form() {
    Outcome out;
    double worst = 0.0;
    for (int n = 2; n <= 8; n += 2) {
        const Walk walk = build_spatial(Language::eq(), n);
        const std::string target = *target_word(Language::eq(), n);
        for (const std::string& word : all_words(n)) {
            int mismatches = 0;
            for (int j = 0; j < n; ++j)
                if (word[static_cast<std::size_t>(j)] != target[static_cast<std::size_t>(j)])
                    ++mismatches;
            const double predicted = static_cast<double>((n - mismatches) * (n - mismatches)) /
                                     static_cast<double>(n * n);
            const double measured = run_word(walk, word).p_accept;
            worst = std::max(worst, std::abs(measured - predicted));
        }
    }
    out.require(worst < 1e-9, "max |measured - (n-k)^2/n^2| = " + format_double(worst));
    out.detail = "max deviation " + format_double(worst);
    return out;
}

// 5. Bounds report: pinned desk-scale outcomes, reproduced by rerun.
Outcome criterion_bounds() {
    Outcome out;
    const auto spatial = exp_bound_sweep(Language::eq(), WalkMode::Spatial, 10);
    const auto sequential = exp_bound_sweep(Language::ab(), WalkMode::Sequential, 10);

    const auto find_row = [](const std::vector<BoundsRow>& rows, int n) -> const BoundsRow* {
        for (const BoundsRow& r : rows)
            if (r.n == n) return &r;
        return nullptr;
    };

    const BoundsRow* s2 = find_row(spatial, 2);
    const BoundsRow* s4 = find_row(spatial, 4);
    const BoundsRow* q4 = find_row(sequential, 4);
    out.require(s2 != nullptr && s4 != nullptr && q4 != nullptr, "missing rows");
    if (!out.pass) return out;

    out.require(s2->claim_met, "n=2 spatial claim not met");
    out.require(std::abs(s2->max_accept - 0.25) < 1e-9, "n=2 spatial max != 1/4");
    out.require(!s4->claim_met, "n=4 spatial claim unexpectedly met");
    out.require(std::abs(s4->max_accept - 9.0 / 16.0) < 1e-9, "n=4 spatial max != 9/16");
    out.require(!q4->claim_met, "l=4 sequential claim unexpectedly met");
    out.require(std::abs(q4->max_accept - 0.75) < 1e-9, "l=4 sequential max != 3/4");

    // Independent rerun must reproduce every value within 1e-9.
    const auto spatial2 = exp_bound_sweep(Language::eq(), WalkMode::Spatial, 10);
    const auto sequential2 = exp_bound_sweep(Language::ab(), WalkMode::Sequential, 10);
    out.require(spatial2.size() == spatial.size() && sequential2.size() == sequential.size(),
                "rerun row counts differ");
    for (std::size_t i = 0; i < spatial.size() && out.pass; ++i)
        out.require(std::abs(spatial2[i].max_accept - spatial[i].max_accept) < 1e-9 &&
                        spatial2[i].argmax_word == spatial[i].argmax_word,
                    "spatial rerun differs at row " + std::to_string(i));
    for (std::size_t i = 0; i < sequential.size() && out.pass; ++i)
        out.require(std::abs(sequential2[i].max_accept - sequential[i].max_accept) < 1e-9,
                    "sequential rerun differs at row " + std::to_string(i));

    std::ostringstream detail;
    detail << "spatial n=4 max " << format_double(s4->max_accept) << ", sequential l=4 max "
           << format_double(q4->max_accept);
    out.detail = detail.str();
    return out;
}

// 6. 200-row fidelity curves: unity exactly on the language words; < 60 s.
Outcome criterion_fidelity_curves() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();

    const auto rows_eq = exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 200);
    const auto rows_ab = exp_fidelity_curve(Language::ab(), WalkMode::Sequential, 200);
    out.require(rows_eq.size() == 200 && rows_ab.size() == 200, "row counts");

    const std::set<std::string> peaks_eq = {"ab", "aabb", "aaabbb"};
    const std::set<std::string> peaks_ab = {"ab", "abab", "ababab"};
    for (const FidelityRow& r : rows_eq) {
        if (peaks_eq.count(r.word))
            out.require(std::abs(r.fidelity - 1.0) < 1e-9,
                        "eq fidelity at " + r.word + " = " + format_double(r.fidelity));
        else
            out.require(r.fidelity < 1.0 - 1e-9,
                        "eq fidelity at " + r.word + " = " + format_double(r.fidelity));
    }
    for (const FidelityRow& r : rows_ab) {
        if (peaks_ab.count(r.word))
            out.require(std::abs(r.fidelity - 1.0) < 1e-9,
                        "ab fidelity at " + r.word + " = " + format_double(r.fidelity));
        else
            out.require(r.fidelity < 1.0 - 1e-9,
                        "ab fidelity at " + r.word + " = " + format_double(r.fidelity));
    }

    const double elapsed = seconds_since(start);
    out.require(elapsed < 60.0, "runtime " + format_double(elapsed) + " s exceeds 60 s");
    if (out.pass) out.detail = format_double(elapsed) + " s for both curves";
    return out;
}

// 7. Quantum-input curves partition into exactly 4 match-count classes.
Outcome criterion_quantum_classes() {
    Outcome out;
    const int grid = 101;
    const auto rows = exp_quantum_input("aabb", grid);

    std::map<std::string, std::vector<double>> curves;
    std::map<std::string, int> match_of;
    for (const QuantumInputRow& r : rows) {
        curves[r.other].push_back(r.fidelity);
        match_of[r.other] = r.match_count;
    }
    out.require(curves.size() == 15, "expected 15 curves");

    std::map<int, std::vector<std::string>> classes;
    for (const auto& [word, match] : match_of) classes[match].push_back(word);
    out.require(classes.size() == 4, "expected 4 classes");
    for (int match = 0; match <= 3; ++match)
        out.require(classes.count(match) == 1, "missing class " + std::to_string(match));

    // Pointwise coincidence inside each class; separation between classes.
    for (const auto& [match, words] : classes) {
        const std::vector<double>& reference = curves[words.front()];
        for (const std::string& word : words)
            for (std::size_t i = 0; i < reference.size(); ++i)
                out.require(std::abs(curves[word][i] - reference[i]) < 1e-9,
                            "class " + std::to_string(match) + " not coincident at " + word);
    }

    for (const auto& [word, curve] : curves) {
        out.require(std::abs(curve.front() - 1.0) < 1e-9, "theta=0 endpoint at " + word);
    }
    out.require(std::abs(curves["bbaa"].back() - 0.0) < 1e-9, "bbaa theta=pi/2 endpoint");
    out.detail = "15 curves in 4 coincident classes";
    return out;
}

// 8. Jaro oracle values and range.
Outcome criterion_jaro() {
    Outcome out;
    out.require(std::abs(jaro("abba", "abba") - 1.0) == 0.0, "jaro(w,w) != 1");
    out.require(jaro("ab", "ba") == 0.0, "jaro(ab,ba) != 0");
    out.require(std::abs(jaro("martha", "marhta") - 17.0 / 18.0) < 1e-12, "martha/marhta");

    std::uint64_t state = 0x12345;
    const auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        std::string w1(1 + next() % 8, 'a');
        std::string w2(1 + next() % 8, 'a');
        for (char& c : w1) c = next() % 2 ? 'b' : 'a';
        for (char& c : w2) c = next() % 2 ? 'b' : 'a';
        const double d = jaro(w1, w2);
        out.require(d >= 0.0 && d <= 1.0, "jaro out of range for " + w1 + "/" + w2);
    }
    out.detail = "oracle values and 10000 random pairs in range";
    return out;
}

// 9. Cut-point separation of the sequential ab family at lengths <= 8.
Outcome criterion_cutpoint() {
    Outcome out;
    std::vector<AcceptanceRecord> records;
    for (int n = 1; n <= 8; ++n) {
        const Walk walk = build_sequential(Language::ab(), n);
        for (const std::string& word : all_words(n)) {
            AcceptanceRecord r;
            r.word = word;
            r.in_language = membership(Language::ab(), word);
            r.acceptance_probability = run_word(walk, word).p_accept;
            records.push_back(std::move(r));
        }
    }
    const CutpointResult cut = cutpoint_margin(records);
    std::ostringstream detail;
    detail << "lambda = " << format_double(cut.lambda)
           << ", epsilon = " << format_double(cut.epsilon);
    out.detail = detail.str();
    out.require(cut.epsilon >= 0.12, "epsilon " + format_double(cut.epsilon) + " < 0.12 (" +
                                         detail.str() + ")");
    return out;
}

// 10. Byte-identical reruns for every experiment CSV and SVG.
Outcome criterion_determinism() {
    Outcome out;
    const auto check_pair = [&](const std::string& a, const std::string& b,
                                const std::string& what) {
        out.require(a == b, what + " not byte-identical");
    };

    const std::string fig2a = to_csv(exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 60),
                                     "fig2");
    const std::string fig2b = to_csv(exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 60),
                                     "fig2");
    check_pair(fig2a, fig2b, "fig2 csv");
    check_pair(render_svg(fig2a), render_svg(fig2b), "fig2 svg");

    const std::string fig4a =
        to_csv(exp_fidelity_curve(Language::ab(), WalkMode::Sequential, 60), "fig4");
    const std::string fig4b =
        to_csv(exp_fidelity_curve(Language::ab(), WalkMode::Sequential, 60), "fig4");
    check_pair(fig4a, fig4b, "fig4 csv");

    const std::string fig5a = to_csv(exp_quantum_input("aabb", 51));
    const std::string fig5b = to_csv(exp_quantum_input("aabb", 51));
    check_pair(fig5a, fig5b, "fig5 csv");
    check_pair(render_svg(fig5a), render_svg(fig5b), "fig5 svg");

    const std::string boundsa =
        to_csv(exp_bound_sweep(Language::ab(), WalkMode::Sequential, 6));
    const std::string boundsb =
        to_csv(exp_bound_sweep(Language::ab(), WalkMode::Sequential, 6));
    check_pair(boundsa, boundsb, "bounds csv");

    const std::string resa = to_csv(exp_resources(8));
    const std::string resb = to_csv(exp_resources(8));
    check_pair(resa, resb, "resources csv");
    check_pair(render_svg(resa), render_svg(resb), "resources svg");

    const std::string disca = to_csv(exp_discriminate("aabb", "abbb", 31));
    const std::string discb = to_csv(exp_discriminate("aabb", "abbb", 31));
    check_pair(disca, discb, "discriminate csv");
    check_pair(render_svg(disca), render_svg(discb), "discriminate svg");

    out.detail = "all experiment outputs byte-stable";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "unitarity suite", criterion_unitarity},
        {2, "grover transmission", criterion_grover_transmission},
        {3, "in-language certainty", criterion_certainty},
        {4, "spatial closed-form oracle", criterion_spatial_closed_form},
        {5, "bounds report", criterion_bounds},
        {6, "fidelity curve analogues", criterion_fidelity_curves},
        {7, "quantum-input classes", criterion_quantum_classes},
        {8, "jaro oracle", criterion_jaro},
        {9, "cut-point margin", criterion_cutpoint},
        {10, "determinism", criterion_determinism},
    };

    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (selected != 0 && criterion.id != selected) continue;
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d %-28s %s%s%s\n", criterion.id, criterion.name,
                    outcome.pass ? "PASS" : "FAIL", outcome.detail.empty() ? "" : " - ",
                    outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    return failures;
}
