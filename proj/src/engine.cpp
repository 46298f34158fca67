#include "lingwalk/engine.hpp"

#include <stdexcept>
#include <string>

namespace lingwalk {

namespace {

std::vector<CoinMatrix> realize_table(const PortedGraph& graph, const CoinTable& coins) {
    if (static_cast<int>(coins.size()) != graph.vertex_count())
        throw std::invalid_argument("coins: table does not cover every vertex");
    std::vector<CoinMatrix> out;
    out.reserve(coins.size());
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (coins[v].dim != graph.degree(v))
            throw std::invalid_argument("coins: dimension mismatch at vertex " +
                                        std::to_string(v));
        out.push_back(coins[v].realize());
    }
    return out;
}

}  // namespace

void step_into(const PortedGraph& graph, const std::vector<CoinMatrix>& compiled,
               const ArcState& psi, ArcState& out) {
    if (psi.dim() != graph.slot_count())
        throw std::invalid_argument("step: state shape does not match graph port-ends");
    out.amps.assign(graph.slot_count(), Amplitude{0.0, 0.0});
    // Coin each vertex block, writing every coined amplitude straight to the
    // other end of its arc (the shift).
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const CoinMatrix& c = compiled[static_cast<std::size_t>(v)];
        const std::size_t base = graph.slot_begin(v);
        for (int p = 0; p < c.dim; ++p) {
            Amplitude acc{0.0, 0.0};
            for (int q = 0; q < c.dim; ++q) acc += c.at(p, q) * psi.amps[base + q];
            out.amps[graph.mate(base + p)] = acc;
        }
    }
}

ArcState step(const PortedGraph& graph, const CoinTable& coins, const ArcState& psi) {
    const std::vector<CoinMatrix> compiled = realize_table(graph, coins);
    ArcState out;
    step_into(graph, compiled, psi, out);
    return out;
}

ArcState step_adjoint(const PortedGraph& graph, const CoinTable& coins, const ArcState& psi) {
    if (psi.dim() != graph.slot_count())
        throw std::invalid_argument("step_adjoint: state shape does not match graph port-ends");
    const std::vector<CoinMatrix> compiled = realize_table(graph, coins);
    // U† = C† S: un-shift, then apply each conjugate-transposed coin.
    ArcState shifted(psi.dim());
    for (std::size_t s = 0; s < psi.dim(); ++s) shifted.amps[graph.mate(s)] = psi.amps[s];
    ArcState out(psi.dim());
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const CoinMatrix& c = compiled[static_cast<std::size_t>(v)];
        const std::size_t base = graph.slot_begin(v);
        for (int p = 0; p < c.dim; ++p) {
            Amplitude acc{0.0, 0.0};
            for (int q = 0; q < c.dim; ++q) acc += std::conj(c.at(q, p)) * shifted.amps[base + q];
            out.amps[base + p] = acc;
        }
    }
    return out;
}

ArcState evolve(const Walk& walk, ArcState psi, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    ArcState scratch;
    for (int t = 0; t < steps; ++t) {
        step_into(walk.graph(), walk.compiled_coins(), psi, scratch);
        std::swap(psi, scratch);
    }
    return psi;
}

double region_probability(const PortedGraph& graph, const ArcState& psi,
                          std::span<const VertexId> region) {
    if (psi.dim() != graph.slot_count())
        throw std::invalid_argument("region_probability: state shape mismatch");
    double acc = 0.0;
    for (VertexId v : region) {
        if (!graph.contains(v))
            throw std::invalid_argument("region_probability: unknown vertex " +
                                        std::to_string(v));
        const std::size_t base = graph.slot_begin(v);
        for (int p = 0; p < graph.degree(v); ++p) acc += std::norm(psi.amps[base + p]);
    }
    return acc;
}

double region_probability(const Walk& walk, const ArcState& psi,
                          std::span<const VertexId> region) {
    return region_probability(walk.graph(), psi, region);
}

double verify_unitarity(const PortedGraph& graph, const CoinTable& coins) {
    // Shift side: the matching must be an involution without fixed points.
    for (std::size_t s = 0; s < graph.slot_count(); ++s) {
        if (graph.mate(s) == s || graph.mate(graph.mate(s)) != s)
            throw std::invalid_argument("verify_unitarity: shift is not an involution");
    }
    const std::vector<CoinMatrix> compiled = realize_table(graph, coins);
    double worst = 0.0;
    for (const CoinMatrix& c : compiled) worst = std::max(worst, c.unitarity_residual());
    return worst;
}

}  // namespace lingwalk
