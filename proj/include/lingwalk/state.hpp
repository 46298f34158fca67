#pragma once

#include <cstddef>
#include <vector>

#include "lingwalk/coins.hpp"

namespace lingwalk {

/// Complex amplitude per (vertex, port) slot; dimension = graph.slot_count().
struct ArcState {
    std::vector<Amplitude> amps;

    ArcState() = default;
    explicit ArcState(std::size_t dim) : amps(dim) {}

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
};

/// <phi|psi>
Amplitude inner_product(const ArcState& phi, const ArcState& psi);

}  // namespace lingwalk
