#pragma once

#include <string>
#include <vector>

#include "lingwalk/coins.hpp"
#include "lingwalk/graph.hpp"
#include "lingwalk/languages.hpp"

namespace lingwalk {

enum class WalkMode { Spatial, Sequential };

std::string to_string(WalkMode mode);
WalkMode walk_mode_from_string(std::string_view text);

/// Where position j's symbol weights are placed in the initial state:
/// the a-lane slot and the b-lane slot.
struct InputSlots {
    PortEnd a_slot;
    PortEnd b_slot;
};

/// A complete acceptor: arena + coins + input layout + accept/reject regions
/// + the prescribed number of steps. Immutable once assembled; assembly
/// verifies coin dimensions, unitarity (residual < 1e-12), region validity
/// and disjointness, and that input slots are distinct.
class Walk {
public:
    Walk(PortedGraph graph, CoinTable coins, std::vector<InputSlots> input_map,
         std::vector<VertexId> accept_region, std::vector<VertexId> reject_region, int steps,
         WalkMode mode, Language language, int input_length);

    const PortedGraph& graph() const { return graph_; }
    const CoinTable& coins() const { return coins_; }
    const std::vector<InputSlots>& input_map() const { return input_map_; }
    const std::vector<VertexId>& accept_region() const { return accept_region_; }
    const std::vector<VertexId>& reject_region() const { return reject_region_; }
    int steps() const { return steps_; }
    WalkMode mode() const { return mode_; }
    const Language& language() const { return language_; }
    int input_length() const { return input_length_; }

    /// Realized per-vertex coin matrices, in vertex order.
    const std::vector<CoinMatrix>& compiled_coins() const { return compiled_; }

private:
    PortedGraph graph_;
    CoinTable coins_;
    std::vector<InputSlots> input_map_;
    std::vector<VertexId> accept_region_;
    std::vector<VertexId> reject_region_;
    int steps_;
    WalkMode mode_;
    Language language_;
    int input_length_;
    std::vector<CoinMatrix> compiled_;
};

/// Same walk with the accept and reject regions exchanged. Throws when the
/// reject region is empty (nothing to invert into).
Walk complement(const Walk& walk);

}  // namespace lingwalk
