#include "lingwalk/state.hpp"

#include <stdexcept>

namespace lingwalk {

double ArcState::norm_sq() const {
    double acc = 0.0;
    for (const Amplitude& x : amps) acc += std::norm(x);
    return acc;
}

Amplitude inner_product(const ArcState& phi, const ArcState& psi) {
    if (phi.dim() != psi.dim())
        throw std::invalid_argument("inner_product: state dimensions differ");
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < phi.dim(); ++i) acc += std::conj(phi.amps[i]) * psi.amps[i];
    return acc;
}

}  // namespace lingwalk
