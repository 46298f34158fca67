#pragma once

#include <string_view>

#include "lingwalk/quantum_word.hpp"
#include "lingwalk/state.hpp"
#include "lingwalk/walk.hpp"

namespace lingwalk {

/// Star-funnel acceptor for the length-n word of `language`, processed in
/// exactly 3 steps.
///
/// Layout: two degree-1 input nodes per position; the node carrying the
/// target symbol of position j is wired to the accept hub, the other to the
/// reject hub. Each hub has degree 2n (input ports first, collector ports
/// second) and carries Grover(2n); 2n degree-2 collectors (Grover(2) = swap)
/// forward into the accept node A and reject node R, degree n each. Grover
/// coins of the appropriate dimension sit at every vertex. 4n + 4 vertices.
///
/// Throws when `language` has no word of length n; n = 0 is rejected too
/// (the empty word is accepted by convention without building a walk).
Walk build_spatial(const Language& language, int n);

/// Rail-splitter-merge acceptor processing words of length <= n streamed one
/// node per step.
///
/// Layout: rail nodes R_n..R_1 with conveyor coins, joined by parallel lane
/// pairs; a splitter routes the a-lane through a delay path of length delta
/// (1 for ab, n/2 for eq, so that the halves of each expected pair reach the
/// merge node simultaneously) and the b-lane straight to the merge node; the
/// merge node carries the Hadamard merge coin and feeds an accept chain and
/// a reject chain of swap nodes long enough (n + delta) that nothing leaves
/// them before the prescribed T = n + delta + 2 steps.
Walk build_sequential(const Language& language, int n);

/// Swap-coin acceptor for exactly the word w, streamed from the rail.
///
/// The two lanes leaving the rail head continue into two parallel chains of
/// swap nodes; between consecutive depths the lane pair is wired straight or
/// crossed so that, per position, the expected-symbol packet ends on the
/// accept chain and the other lane's packet on the reject chain. T = |w|
/// steps; 2|w| nodes beyond the rail. Throws on the empty word.
Walk build_sequential_word(std::string_view w);

/// Place position weights (x_j, y_j), scaled by 1/sqrt(n), on position j's
/// a-node and b-node ports. Input length must equal the walk's.
ArcState encode_spatial(const Walk& walk, const QuantumWord& input);

/// Place position weights, scaled by 1/sqrt(|input|), on rail node R_j's
/// lane ports, the per-node layout (x_j, y_j, 0, 0). Inputs shorter than the
/// rail are allowed; longer ones throw.
ArcState encode_sequential(const Walk& walk, const QuantumWord& input);

/// Mode dispatch over the two encoders.
ArcState encode(const Walk& walk, const QuantumWord& input);

/// Read the input weights back out of an (initial) state; inverse of encode.
QuantumWord decode_input(const Walk& walk, const ArcState& psi);

/// Equal-amplitude, equal-phase superposition over the accept region's
/// ports. For the spatial construction this is exactly the final state the
/// target word produces.
ArcState spatial_accepting_state(const Walk& walk);

}  // namespace lingwalk
