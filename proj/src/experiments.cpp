#include "lingwalk/experiments.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "lingwalk/csv.hpp"
#include "lingwalk/engine.hpp"

namespace lingwalk {

namespace {

/// All 2^length words of one length in lexicographic order (a < b).
std::vector<std::string> words_of_length(int length) {
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

double theta_at(int i, int grid_size) {
    return std::numbers::pi / 2.0 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
}

/// Odd-length spatial inputs run on the next even length's walk with the
/// last position left dark, scaled so the state still has norm 1. Words in
/// the language never arise at odd lengths, and the dark position keeps the
/// accept amplitude strictly below certainty.
ArcState encode_spatial_padded(const Walk& walk, const QuantumWord& input) {
    if (input.length() == walk.input_length()) return encode_spatial(walk, input);
    if (input.length() + 1 != walk.input_length())
        throw std::invalid_argument("spatial padding covers exactly one missing position");
    const double alpha = 1.0 / std::sqrt(static_cast<double>(input.length()));
    ArcState psi(walk.graph().slot_count());
    for (int j = 0; j < input.length(); ++j) {
        const InputSlots& slots = walk.input_map()[static_cast<std::size_t>(j)];
        psi.amps[walk.graph().slot(slots.a_slot.vertex, slots.a_slot.port)] =
            alpha * input.at(j).a;
        psi.amps[walk.graph().slot(slots.b_slot.vertex, slots.b_slot.port)] =
            alpha * input.at(j).b;
    }
    return psi;
}

}  // namespace

ArcState accepting_state(const Walk& walk, int input_length) {
    if (walk.mode() == WalkMode::Spatial) return spatial_accepting_state(walk);
    const std::string ref = reference_word(walk.language(), input_length);
    return finish(walk, encode_sequential(walk, QuantumWord::classical(ref)));
}

RunResult run_input(const Walk& walk, const QuantumWord& input) {
    ArcState psi;
    if (walk.mode() == WalkMode::Spatial)
        psi = encode_spatial_padded(walk, input);
    else
        psi = encode_sequential(walk, input);
    psi = finish(walk, psi);

    RunResult result;
    result.p_accept = region_probability(walk, psi, walk.accept_region());
    result.p_reject = region_probability(walk, psi, walk.reject_region());
    result.p_elsewhere = 1.0 - result.p_accept - result.p_reject;
    try {
        result.fidelity = fidelity(psi, accepting_state(walk, input.length()));
    } catch (const std::invalid_argument&) {
        result.fidelity = std::nullopt;  // no reference word at this length
    }
    return result;
}

RunResult run_word(const Walk& walk, std::string_view word) {
    return run_input(walk, QuantumWord::classical(word));
}

std::vector<FidelityRow> exp_fidelity_curve(const Language& language, WalkMode mode, int count) {
    if (count < 1) throw std::invalid_argument("fidelity curve: count must be >= 1");
    std::vector<FidelityRow> rows;
    rows.reserve(static_cast<std::size_t>(count));

    int built_for = -1;  // walk cache; consecutive strings share lengths
    std::optional<Walk> walk;
    std::optional<ArcState> accept_state;

    const std::vector<std::string> words = enumerate_strings(count);
    for (int i = 0; i < count; ++i) {
        const std::string& word = words[static_cast<std::size_t>(i)];
        const int length = static_cast<int>(word.size());
        const int walk_length =
            (mode == WalkMode::Spatial && length % 2 == 1) ? length + 1 : length;
        try {
            if (walk_length != built_for) {
                walk = mode == WalkMode::Spatial ? build_spatial(language, walk_length)
                                                 : build_sequential(language, walk_length);
                built_for = walk_length;
                accept_state.reset();
            }
            FidelityRow row;
            row.index = i + 1;
            row.word = word;
            row.length = length;
            row.in_language = membership(language, word);
            row.jaro = jaro(word, reference_word(language, length));

            ArcState psi = mode == WalkMode::Spatial
                               ? encode_spatial_padded(*walk, QuantumWord::classical(word))
                               : encode_sequential(*walk, QuantumWord::classical(word));
            psi = finish(*walk, psi);
            row.acceptance = region_probability(*walk, psi, walk->accept_region());
            // Sequential walks are built per exact length, so the cached state
            // is valid for every string sharing the walk in both modes.
            if (!accept_state) accept_state = accepting_state(*walk, length);
            row.fidelity = fidelity(psi, *accept_state);
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::invalid_argument("fidelity curve: string '" + word + "': " + e.what());
        }
    }
    return rows;
}

std::vector<QuantumInputRow> exp_quantum_input(const std::string& base, int grid_size) {
    if (base.size() % 2 != 0 || base.empty())
        throw std::invalid_argument("quantum input: base length must be even and positive");
    if (grid_size < 2) throw std::invalid_argument("quantum input: grid needs >= 2 points");

    const int n = static_cast<int>(base.size());
    const Walk walk = build_spatial(Language::specific(base), n);
    const ArcState phi = spatial_accepting_state(walk);

    std::vector<QuantumInputRow> rows;
    for (const std::string& other : words_of_length(n)) {
        if (other == base) continue;
        int match_count = 0;
        for (int j = 0; j < n; ++j)
            if (other[static_cast<std::size_t>(j)] == base[static_cast<std::size_t>(j)])
                ++match_count;
        for (int i = 0; i < grid_size; ++i) {
            const double theta = theta_at(i, grid_size);
            const ArcState psi =
                finish(walk, encode_spatial(walk, superpose_words(base, other, theta)));
            rows.push_back({theta, other, match_count, fidelity(psi, phi)});
        }
    }
    return rows;
}

std::vector<BoundsRow> exp_bound_sweep(const Language& language, WalkMode mode, int max_len) {
    if (max_len < 1) throw std::invalid_argument("bounds: max length must be >= 1");
    if (max_len > 14)
        throw std::invalid_argument("bounds: exhaustive sweep capped at length 14, got " +
                                    std::to_string(max_len));
    std::vector<BoundsRow> rows;
    for (int n = 1; n <= max_len; ++n) {
        if (mode == WalkMode::Spatial && n % 2 == 1) continue;  // no walk without a target
        const Walk walk = mode == WalkMode::Spatial ? build_spatial(language, n)
                                                    : build_sequential(language, n);
        const auto target = target_word(language, n);

        BoundsRow row;
        row.mode = to_string(mode);
        row.n = n;
        row.target = target.value_or("-");
        row.paper_claim = mode == WalkMode::Spatial ? 2.0 / (static_cast<double>(n) * n) : 0.5;
        row.max_accept = 0.0;
        for (const std::string& word : words_of_length(n)) {
            if (target && word == *target) continue;
            ++row.nonword_count;
            const double p = run_word(walk, word).p_accept;
            if (p > row.max_accept) {
                row.max_accept = p;
                row.argmax_word = word;
            }
        }
        row.claim_met = row.max_accept <= row.paper_claim + 1e-9;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ResourceRow> exp_resources(int max_len) {
    if (max_len < 2) throw std::invalid_argument("resources: max length must be >= 2");
    std::vector<ResourceRow> rows;
    for (int n = 2; n <= max_len; n += 2) {
        {
            const Walk walk = build_spatial(Language::eq(), n);
            rows.push_back({n, "spatial", walk.graph().vertex_count(), walk.steps(), 4 * n + 3,
                            3});
        }
        {
            const Walk walk = build_sequential(Language::ab(), n);
            ResourceRow row{n, "sequential", walk.graph().vertex_count() - n, walk.steps(),
                            std::nullopt, std::nullopt};
            if (n == 4) row.paper_steps = 5;  // (ab)^2 on the general acceptor
            rows.push_back(std::move(row));
        }
        {
            const Walk walk = build_sequential_word(*target_word(Language::ab(), n));
            ResourceRow row{n, "sequential_word", walk.graph().vertex_count() - n, walk.steps(),
                            std::nullopt, std::nullopt};
            if (n == 4) {
                row.paper_nodes = 8;
                row.paper_steps = 6;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<DiscriminationRow> exp_discriminate(const std::string& w1, const std::string& w2,
                                                int grid_size) {
    if (w1.size() != w2.size()) throw std::invalid_argument("discriminate: lengths differ");
    if (w1.empty()) throw std::invalid_argument("discriminate: empty words");
    if (grid_size < 2) throw std::invalid_argument("discriminate: grid needs >= 2 points");

    const Walk walk = build_spatial(Language::specific(w1), static_cast<int>(w1.size()));
    std::vector<DiscriminationRow> rows;
    rows.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double theta = theta_at(i, grid_size);
        const double p1 =
            run_input(walk, superpose_words(w1, w2, theta)).p_accept;
        const double p2 =
            run_input(walk, superpose_words(w2, w1, theta)).p_accept;
        rows.push_back({theta, p1, p2, discrimination_success(p1, p2)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// CSV renderings
// ---------------------------------------------------------------------------

namespace {

std::string csv_header(const std::string& tag, const std::string& columns) {
    return "# lingwalk v1 " + tag + "\n" + columns + "\n";
}

}  // namespace

std::string to_csv(const std::vector<FidelityRow>& rows, const std::string& tag) {
    std::string out =
        csv_header(tag, "index,string,length,fidelity,jaro,acceptance,in_language");
    for (const FidelityRow& r : rows) {
        out += std::to_string(r.index) + "," + r.word + "," + std::to_string(r.length) + "," +
               format_double(r.fidelity) + "," + format_double(r.jaro) + "," +
               format_double(r.acceptance) + "," + (r.in_language ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<QuantumInputRow>& rows) {
    std::string out = csv_header("fig5", "theta,other_string,match_count,fidelity");
    for (const QuantumInputRow& r : rows) {
        out += format_double(r.theta) + "," + r.other + "," + std::to_string(r.match_count) +
               "," + format_double(r.fidelity) + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<BoundsRow>& rows) {
    std::string out = csv_header(
        "bounds", "mode,n,target,nonword_count,max_accept,argmax_string,paper_claim,claim_met");
    for (const BoundsRow& r : rows) {
        out += r.mode + "," + std::to_string(r.n) + "," + r.target + "," +
               std::to_string(r.nonword_count) + "," + format_double(r.max_accept) + "," +
               r.argmax_word + "," + format_double(r.paper_claim) + "," +
               (r.claim_met ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<ResourceRow>& rows) {
    std::string out =
        csv_header("resources", "n,mode,nodes,steps,paper_nodes,paper_steps");
    for (const ResourceRow& r : rows) {
        out += std::to_string(r.n) + "," + r.mode + "," + std::to_string(r.nodes) + "," +
               std::to_string(r.steps) + ",";
        out += r.paper_nodes ? std::to_string(*r.paper_nodes) : std::string();
        out += ",";
        out += r.paper_steps ? std::to_string(*r.paper_steps) : std::string();
        out += "\n";
    }
    return out;
}

std::string to_csv(const std::vector<DiscriminationRow>& rows) {
    std::string out = csv_header("discriminate", "theta,p_accept_1,p_accept_2,success");
    for (const DiscriminationRow& r : rows) {
        out += format_double(r.theta) + "," + format_double(r.p_accept_1) + "," +
               format_double(r.p_accept_2) + "," + format_double(r.success) + "\n";
    }
    return out;
}

}  // namespace lingwalk
