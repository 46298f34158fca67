#pragma once

#include <complex>
#include <vector>

namespace lingwalk {

using Amplitude = std::complex<double>;

/// Dense row-major d x d complex matrix.
struct CoinMatrix {
    int dim = 0;
    std::vector<Amplitude> m;  // dim * dim entries

    Amplitude& at(int row, int col) { return m[static_cast<std::size_t>(row) * dim + col]; }
    const Amplitude& at(int row, int col) const {
        return m[static_cast<std::size_t>(row) * dim + col];
    }

    /// max |(C†C - I)_{ij}|
    double unitarity_residual() const;
};

/// d-dimensional Grover operator: (2-d)/d on the diagonal, 2/d elsewhere.
/// The reflection about the uniform vector; d = 1 is the identity and d = 2
/// the plain swap. Throws on d < 1.
CoinMatrix grover_coin(int d);

/// 4x4 merge coin with port order (in-a, in-b, out-accept, out-reject):
/// sends (x, y, ., .) to (., ., (x+y)/sqrt2, (x-y)/sqrt2) and symmetrically
/// on the other block. Equals sigma_x tensor H.
CoinMatrix hadamard_merge_coin();

/// 4x4 rail coin sigma_x tensor I_2 with port order
/// (prev-a, prev-b, next-a, next-b): swaps the prev block with the next
/// block, lanes preserved.
CoinMatrix conveyor_coin();

enum class CoinKind {
    Grover,
    HadamardMerge,
    Conveyor,
    PortPermutation,
    Identity,
    Custom,
};

/// Per-vertex coin assignment. The realized matrix dimension must match the
/// vertex degree; realized coins must be unitary to 1e-12 (checked when a
/// walk is assembled).
struct CoinSpec {
    CoinKind kind = CoinKind::Identity;
    int dim = 1;
    std::vector<int> perm;           // PortPermutation: port p -> perm[p]
    std::vector<Amplitude> phases;   // PortPermutation: unit-modulus factors
    std::vector<Amplitude> matrix;   // Custom: row-major dim x dim

    static CoinSpec grover(int d);
    static CoinSpec hadamard_merge();
    static CoinSpec conveyor();
    /// phases empty means all ones; each must have unit modulus.
    static CoinSpec permutation(std::vector<int> perm, std::vector<Amplitude> phases = {});
    static CoinSpec identity(int d);
    static CoinSpec custom(int d, std::vector<Amplitude> row_major);

    CoinMatrix realize() const;
};

/// Coin assignment covering every vertex; index = VertexId.
using CoinTable = std::vector<CoinSpec>;

}  // namespace lingwalk
