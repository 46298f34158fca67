#pragma once

#include <span>

#include "lingwalk/coins.hpp"
#include "lingwalk/graph.hpp"
#include "lingwalk/state.hpp"
#include "lingwalk/walk.hpp"

namespace lingwalk {

/// Residual below which a coin table counts as unitary.
inline constexpr double kUnitaryTol = 1e-12;

/// One step U = SC: every vertex's coin mixes its port block, then the
/// arc-reversal shift exchanges amplitude across each edge's two ends.
/// Throws on state/graph dimension mismatch or coin/degree mismatch.
ArcState step(const PortedGraph& graph, const CoinTable& coins, const ArcState& psi);

/// step() with coins already realized; `out` is overwritten (must not alias psi).
void step_into(const PortedGraph& graph, const std::vector<CoinMatrix>& compiled,
               const ArcState& psi, ArcState& out);

/// Adjoint of one step, C† S; step_adjoint(step(psi)) == psi.
ArcState step_adjoint(const PortedGraph& graph, const CoinTable& coins, const ArcState& psi);

/// T-fold application of step; T = 0 returns psi unchanged.
ArcState evolve(const Walk& walk, ArcState psi, int steps);

/// Run the walk's prescribed number of steps.
inline ArcState finish(const Walk& walk, ArcState psi) {
    return evolve(walk, std::move(psi), walk.steps());
}

/// Sum of |amplitude|^2 over all ports of the region's vertices.
/// Throws on a vertex id outside the graph.
double region_probability(const PortedGraph& graph, const ArcState& psi,
                          std::span<const VertexId> region);

double region_probability(const Walk& walk, const ArcState& psi,
                          std::span<const VertexId> region);

/// Max over vertices of ||C†C - I||_max; also checks that the shift is a
/// permutation involution on port-ends (guaranteed by PortedGraph's matching
/// invariant, revalidated here). Used as a build-time gate.
double verify_unitarity(const PortedGraph& graph, const CoinTable& coins);

}  // namespace lingwalk
