#include "lingwalk/builders.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lingwalk/engine.hpp"

namespace lingwalk {

namespace {

CoinSpec swap2() { return CoinSpec::permutation({1, 0}); }

void append_rail(std::vector<int>& degrees, std::vector<Edge>& edges, CoinTable& coins,
                 std::vector<InputSlots>& input_map, int n, VertexId head_sink_a_vertex,
                 Port head_sink_a_port, VertexId head_sink_b_vertex, Port head_sink_b_port) {
    // Rail nodes R_1..R_n occupy vertex ids 0..n-1 with port order
    // (prev-a, prev-b, next-a, next-b); "next" points at the head. Consecutive
    // nodes share a parallel lane pair, the tail node's prev ports are paired
    // off on a self-loop, and the head node's next ports feed the sinks.
    for (int j = 1; j <= n; ++j) {
        degrees.push_back(4);
        coins.push_back(CoinSpec::conveyor());
        input_map.push_back({{j - 1, 0}, {j - 1, 1}});
    }
    edges.push_back({{n - 1, 0}, {n - 1, 1}});
    for (int j = n; j >= 2; --j) {
        edges.push_back({{j - 1, 2}, {j - 2, 0}});
        edges.push_back({{j - 1, 3}, {j - 2, 1}});
    }
    edges.push_back({{0, 2}, {head_sink_a_vertex, head_sink_a_port}});
    edges.push_back({{0, 3}, {head_sink_b_vertex, head_sink_b_port}});
}

}  // namespace

Walk build_spatial(const Language& language, int n) {
    if (n == 0)
        throw std::invalid_argument(
            "build_spatial: the empty input is accepted by convention; no walk is built");
    if (n < 0) throw std::invalid_argument("build_spatial: negative length");
    const auto target = target_word(language, n);
    if (!target)
        throw std::invalid_argument("build_spatial: " + language.to_string() +
                                    " has no word of length " + std::to_string(n));

    // Vertex ids: inputs (a_j = 2(j-1), b_j = 2(j-1)+1), accept hub, reject
    // hub, accept collectors, reject collectors, accept node A, reject node R.
    const VertexId hub_accept = 2 * n;
    const VertexId hub_reject = 2 * n + 1;
    const auto coll_accept = [n](int j) { return 2 * n + 2 + (j - 1); };
    const auto coll_reject = [n](int j) { return 3 * n + 2 + (j - 1); };
    const VertexId accept_node = 4 * n + 2;
    const VertexId reject_node = 4 * n + 3;

    std::vector<int> degrees(static_cast<std::size_t>(4 * n + 4));
    for (int j = 0; j < 2 * n; ++j) degrees[j] = 1;
    degrees[hub_accept] = 2 * n;
    degrees[hub_reject] = 2 * n;
    for (int j = 1; j <= n; ++j) degrees[coll_accept(j)] = degrees[coll_reject(j)] = 2;
    degrees[accept_node] = degrees[reject_node] = n;

    std::vector<Edge> edges;
    std::vector<InputSlots> input_map;
    for (int j = 1; j <= n; ++j) {
        const VertexId node_a = 2 * (j - 1);
        const VertexId node_b = node_a + 1;
        const bool target_is_a = (*target)[j - 1] == 'a';
        const VertexId match = target_is_a ? node_a : node_b;
        const VertexId other = target_is_a ? node_b : node_a;
        // Hub port order: input ports first, collector ports second.
        edges.push_back({{match, 0}, {hub_accept, j - 1}});
        edges.push_back({{other, 0}, {hub_reject, j - 1}});
        edges.push_back({{hub_accept, n + j - 1}, {coll_accept(j), 0}});
        edges.push_back({{coll_accept(j), 1}, {accept_node, j - 1}});
        edges.push_back({{hub_reject, n + j - 1}, {coll_reject(j), 0}});
        edges.push_back({{coll_reject(j), 1}, {reject_node, j - 1}});
        input_map.push_back({{node_a, 0}, {node_b, 0}});
    }

    CoinTable coins;
    coins.reserve(degrees.size());
    for (int d : degrees) coins.push_back(CoinSpec::grover(d));

    return Walk(PortedGraph(std::move(degrees), std::move(edges)), std::move(coins),
                std::move(input_map), {accept_node}, {reject_node}, 3, WalkMode::Spatial,
                language, n);
}

Walk build_sequential(const Language& language, int n) {
    if (n < 1) throw std::invalid_argument("build_sequential: length must be >= 1");
    int delay = 0;
    switch (language.kind) {
        case Language::Kind::Ab:
            delay = 1;
            break;
        case Language::Kind::Eq:
            delay = std::max(1, n / 2);
            break;
        case Language::Kind::Word:
            throw std::invalid_argument(
                "build_sequential: specific words use build_sequential_word");
    }
    const int chain_len = n + delay;

    const VertexId splitter = n;
    const auto delay_node = [n](int i) { return n + 1 + (i - 1); };
    const VertexId merge = n + 1 + delay;
    const auto accept_node = [&](int i) { return merge + 1 + (i - 1); };
    const auto reject_node = [&](int i) { return merge + 1 + chain_len + (i - 1); };
    const int total = n + 2 + delay + 2 * chain_len;

    std::vector<int> degrees(static_cast<std::size_t>(total));
    std::vector<Edge> edges;
    CoinTable coins(static_cast<std::size_t>(total));
    std::vector<InputSlots> input_map;

    {
        std::vector<int> deg_tmp;
        CoinTable coin_tmp;
        append_rail(deg_tmp, edges, coin_tmp, input_map, n, splitter, 0, splitter, 1);
        for (int j = 0; j < n; ++j) {
            degrees[j] = deg_tmp[j];
            coins[j] = coin_tmp[j];
        }
    }

    // Splitter: rail lanes in on (0, 1); a-lane out to the delay path on 2,
    // b-lane out to the merge on 3. The conveyor coin is exactly that routing.
    degrees[splitter] = 4;
    coins[splitter] = CoinSpec::conveyor();
    edges.push_back({{splitter, 2}, {delay_node(1), 0}});
    for (int i = 1; i < delay; ++i) edges.push_back({{delay_node(i), 1}, {delay_node(i + 1), 0}});
    edges.push_back({{delay_node(delay), 1}, {merge, 0}});
    edges.push_back({{splitter, 3}, {merge, 1}});
    for (int i = 1; i <= delay; ++i) {
        degrees[delay_node(i)] = 2;
        coins[delay_node(i)] = swap2();
    }

    // Merge: (in-a, in-b, out-accept, out-reject).
    degrees[merge] = 4;
    coins[merge] = CoinSpec::hadamard_merge();
    edges.push_back({{merge, 2}, {accept_node(1), 0}});
    edges.push_back({{merge, 3}, {reject_node(1), 0}});

    std::vector<VertexId> accept_region, reject_region;
    for (int i = 1; i <= chain_len; ++i) {
        const bool terminal = i == chain_len;
        degrees[accept_node(i)] = degrees[reject_node(i)] = terminal ? 1 : 2;
        coins[accept_node(i)] = coins[reject_node(i)] =
            terminal ? CoinSpec::identity(1) : swap2();
        if (!terminal) {
            edges.push_back({{accept_node(i), 1}, {accept_node(i + 1), 0}});
            edges.push_back({{reject_node(i), 1}, {reject_node(i + 1), 0}});
        }
        accept_region.push_back(accept_node(i));
        reject_region.push_back(reject_node(i));
    }

    return Walk(PortedGraph(std::move(degrees), std::move(edges)), std::move(coins),
                std::move(input_map), std::move(accept_region), std::move(reject_region),
                n + delay + 2, WalkMode::Sequential, language, n);
}

Walk build_sequential_word(std::string_view w) {
    if (w.empty())
        throw std::invalid_argument(
            "build_sequential_word: the empty word is accepted by convention; no walk is built");
    const Language language = Language::specific(std::string(w));
    const int n = static_cast<int>(w.size());

    const auto top_node = [n](int d) { return n + (d - 1); };
    const auto bot_node = [n](int d) { return 2 * n + (d - 1); };
    const int total = 3 * n;

    std::vector<int> degrees(static_cast<std::size_t>(total));
    std::vector<Edge> edges;
    CoinTable coins(static_cast<std::size_t>(total));
    std::vector<InputSlots> input_map;

    // Packets reaching depth d at the final step T = n carry the crossing
    // parity of position n - d + 1, so wire each inter-depth segment straight
    // or crossed to put expected-symbol packets on the top chain.
    std::vector<bool> cross_state(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) cross_state[d] = w[static_cast<std::size_t>(n - d - 1)] == 'b';

    {
        std::vector<int> deg_tmp;
        CoinTable coin_tmp;
        const VertexId first_a = cross_state[0] ? bot_node(1) : top_node(1);
        const VertexId first_b = cross_state[0] ? top_node(1) : bot_node(1);
        append_rail(deg_tmp, edges, coin_tmp, input_map, n, first_a, 0, first_b, 0);
        for (int j = 0; j < n; ++j) {
            degrees[j] = deg_tmp[j];
            coins[j] = coin_tmp[j];
        }
    }

    std::vector<VertexId> accept_region, reject_region;
    for (int d = 1; d <= n; ++d) {
        const bool terminal = d == n;
        degrees[top_node(d)] = degrees[bot_node(d)] = terminal ? 1 : 2;
        coins[top_node(d)] = coins[bot_node(d)] = terminal ? CoinSpec::identity(1) : swap2();
        if (!terminal) {
            const bool crossed = cross_state[d] != cross_state[d - 1];
            const VertexId from_top = crossed ? bot_node(d + 1) : top_node(d + 1);
            const VertexId from_bot = crossed ? top_node(d + 1) : bot_node(d + 1);
            edges.push_back({{top_node(d), 1}, {from_top, 0}});
            edges.push_back({{bot_node(d), 1}, {from_bot, 0}});
        }
        accept_region.push_back(top_node(d));
        reject_region.push_back(bot_node(d));
    }

    return Walk(PortedGraph(std::move(degrees), std::move(edges)), std::move(coins),
                std::move(input_map), std::move(accept_region), std::move(reject_region), n,
                WalkMode::Sequential, language, n);
}

ArcState encode_spatial(const Walk& walk, const QuantumWord& input) {
    if (walk.mode() != WalkMode::Spatial)
        throw std::invalid_argument("encode_spatial: walk is not spatial");
    if (input.length() != walk.input_length())
        throw std::invalid_argument("encode_spatial: input length " +
                                    std::to_string(input.length()) + " != walk length " +
                                    std::to_string(walk.input_length()));
    const double alpha = 1.0 / std::sqrt(static_cast<double>(walk.input_length()));
    ArcState psi(walk.graph().slot_count());
    for (int j = 0; j < input.length(); ++j) {
        const InputSlots& slots = walk.input_map()[static_cast<std::size_t>(j)];
        const SymbolWeights& p = input.at(j);
        psi.amps[walk.graph().slot(slots.a_slot.vertex, slots.a_slot.port)] = alpha * p.a;
        psi.amps[walk.graph().slot(slots.b_slot.vertex, slots.b_slot.port)] = alpha * p.b;
    }
    return psi;
}

ArcState encode_sequential(const Walk& walk, const QuantumWord& input) {
    if (walk.mode() != WalkMode::Sequential)
        throw std::invalid_argument("encode_sequential: walk is not sequential");
    if (input.length() > walk.input_length())
        throw std::invalid_argument("encode_sequential: input length " +
                                    std::to_string(input.length()) + " exceeds rail length " +
                                    std::to_string(walk.input_length()));
    ArcState psi(walk.graph().slot_count());
    if (input.length() == 0) return psi;  // empty word: zero-length input
    const double alpha = 1.0 / std::sqrt(static_cast<double>(input.length()));
    for (int j = 0; j < input.length(); ++j) {
        const InputSlots& slots = walk.input_map()[static_cast<std::size_t>(j)];
        const SymbolWeights& p = input.at(j);
        psi.amps[walk.graph().slot(slots.a_slot.vertex, slots.a_slot.port)] = alpha * p.a;
        psi.amps[walk.graph().slot(slots.b_slot.vertex, slots.b_slot.port)] = alpha * p.b;
    }
    return psi;
}

ArcState encode(const Walk& walk, const QuantumWord& input) {
    return walk.mode() == WalkMode::Spatial ? encode_spatial(walk, input)
                                            : encode_sequential(walk, input);
}

QuantumWord decode_input(const Walk& walk, const ArcState& psi) {
    if (psi.dim() != walk.graph().slot_count())
        throw std::invalid_argument("decode_input: state shape mismatch");
    int length = 0;
    for (int j = 0; j < static_cast<int>(walk.input_map().size()); ++j) {
        const InputSlots& slots = walk.input_map()[static_cast<std::size_t>(j)];
        const double mass =
            std::norm(psi.amps[walk.graph().slot(slots.a_slot.vertex, slots.a_slot.port)]) +
            std::norm(psi.amps[walk.graph().slot(slots.b_slot.vertex, slots.b_slot.port)]);
        if (mass > 1e-18) length = j + 1;
    }
    if (length == 0) return QuantumWord();
    const double alpha = 1.0 / std::sqrt(static_cast<double>(length));
    std::vector<SymbolWeights> positions(static_cast<std::size_t>(length));
    for (int j = 0; j < length; ++j) {
        const InputSlots& slots = walk.input_map()[static_cast<std::size_t>(j)];
        positions[static_cast<std::size_t>(j)] = {
            psi.amps[walk.graph().slot(slots.a_slot.vertex, slots.a_slot.port)] / alpha,
            psi.amps[walk.graph().slot(slots.b_slot.vertex, slots.b_slot.port)] / alpha};
    }
    return QuantumWord(std::move(positions));
}

ArcState spatial_accepting_state(const Walk& walk) {
    std::size_t ports = 0;
    for (VertexId v : walk.accept_region())
        ports += static_cast<std::size_t>(walk.graph().degree(v));
    if (ports == 0) throw std::invalid_argument("accepting state: empty accept region");
    const double amp = 1.0 / std::sqrt(static_cast<double>(ports));
    ArcState phi(walk.graph().slot_count());
    for (VertexId v : walk.accept_region()) {
        const std::size_t base = walk.graph().slot_begin(v);
        for (int p = 0; p < walk.graph().degree(v); ++p) phi.amps[base + p] = amp;
    }
    return phi;
}

}  // namespace lingwalk
