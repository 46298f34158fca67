#include "lingwalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lingwalk {

double CoinMatrix::unitarity_residual() const {
    // max |(C†C - I)_{ij}|
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Amplitude acc{0.0, 0.0};
            for (int k = 0; k < dim; ++k) acc += std::conj(at(k, i)) * at(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

CoinMatrix grover_coin(int d) {
    if (d < 1) throw std::invalid_argument("grover_coin: dimension must be >= 1");
    CoinMatrix c{d, std::vector<Amplitude>(static_cast<std::size_t>(d) * d)};
    const double off = 2.0 / d;
    const double diag = (2.0 - d) / d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c.at(i, j) = (i == j) ? diag : off;
    return c;
}

CoinMatrix hadamard_merge_coin() {
    // sigma_x tensor H on port order (in-a, in-b, out-accept, out-reject)
    const double h = 1.0 / std::numbers::sqrt2;
    CoinMatrix c{4, std::vector<Amplitude>(16)};
    c.at(2, 0) = h;
    c.at(2, 1) = h;
    c.at(3, 0) = h;
    c.at(3, 1) = -h;
    c.at(0, 2) = h;
    c.at(0, 3) = h;
    c.at(1, 2) = h;
    c.at(1, 3) = -h;
    return c;
}

CoinMatrix conveyor_coin() {
    // sigma_x tensor I_2 on port order (prev-a, prev-b, next-a, next-b)
    CoinMatrix c{4, std::vector<Amplitude>(16)};
    c.at(2, 0) = 1.0;
    c.at(3, 1) = 1.0;
    c.at(0, 2) = 1.0;
    c.at(1, 3) = 1.0;
    return c;
}

CoinSpec CoinSpec::grover(int d) {
    if (d < 1) throw std::invalid_argument("CoinSpec::grover: dimension must be >= 1");
    return {CoinKind::Grover, d, {}, {}, {}};
}

CoinSpec CoinSpec::hadamard_merge() { return {CoinKind::HadamardMerge, 4, {}, {}, {}}; }

CoinSpec CoinSpec::conveyor() { return {CoinKind::Conveyor, 4, {}, {}, {}}; }

CoinSpec CoinSpec::permutation(std::vector<int> perm, std::vector<Amplitude> phases) {
    const int d = static_cast<int>(perm.size());
    if (d < 1) throw std::invalid_argument("CoinSpec::permutation: empty permutation");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= d || seen[p])
            throw std::invalid_argument("CoinSpec::permutation: not a permutation");
        seen[p] = true;
    }
    if (phases.empty()) phases.assign(perm.size(), Amplitude{1.0, 0.0});
    if (phases.size() != perm.size())
        throw std::invalid_argument("CoinSpec::permutation: phase count mismatch");
    for (const Amplitude& ph : phases)
        if (std::abs(std::abs(ph) - 1.0) > 1e-12)
            throw std::invalid_argument("CoinSpec::permutation: phase is not unit modulus");
    return {CoinKind::PortPermutation, d, std::move(perm), std::move(phases), {}};
}

CoinSpec CoinSpec::identity(int d) {
    if (d < 1) throw std::invalid_argument("CoinSpec::identity: dimension must be >= 1");
    return {CoinKind::Identity, d, {}, {}, {}};
}

CoinSpec CoinSpec::custom(int d, std::vector<Amplitude> row_major) {
    if (d < 1) throw std::invalid_argument("CoinSpec::custom: dimension must be >= 1");
    if (row_major.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("CoinSpec::custom: matrix size mismatch");
    return {CoinKind::Custom, d, {}, {}, std::move(row_major)};
}

CoinMatrix CoinSpec::realize() const {
    switch (kind) {
        case CoinKind::Grover:
            return grover_coin(dim);
        case CoinKind::HadamardMerge:
            return hadamard_merge_coin();
        case CoinKind::Conveyor:
            return conveyor_coin();
        case CoinKind::PortPermutation: {
            CoinMatrix c{dim, std::vector<Amplitude>(static_cast<std::size_t>(dim) * dim)};
            for (int p = 0; p < dim; ++p) c.at(perm[p], p) = phases[p];
            return c;
        }
        case CoinKind::Identity: {
            CoinMatrix c{dim, std::vector<Amplitude>(static_cast<std::size_t>(dim) * dim)};
            for (int p = 0; p < dim; ++p) c.at(p, p) = 1.0;
            return c;
        }
        case CoinKind::Custom:
            return {dim, matrix};
    }
    throw std::logic_error("CoinSpec::realize: bad kind");
}

}  // namespace lingwalk
