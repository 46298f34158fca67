#pragma once

#include <cstddef>
#include <vector>

namespace lingwalk {

using VertexId = int;
using Port = int;

/// One end of an undirected edge: port `port` of vertex `vertex`.
struct PortEnd {
    VertexId vertex = -1;
    Port port = -1;
    friend bool operator==(const PortEnd&, const PortEnd&) = default;
};

/// Undirected edge binding two port-ends. Parallel edges and self-loops are
/// allowed; the two ends must be distinct (vertex, port) slots.
struct Edge {
    PortEnd a;
    PortEnd b;
};

/// Undirected multigraph with per-vertex ordered ports 0..degree(v)-1.
///
/// The edge list is a perfect matching on port-ends: every (vertex, port)
/// slot is bound to exactly one edge end. The walker state lives on these
/// slots, and the arc-reversal shift is the involution that exchanges the
/// two ends of each edge.
class PortedGraph {
public:
    /// Validates degrees and the port-end matching; throws std::invalid_argument
    /// on gaps, repeats, out-of-range ports or degree < 1.
    PortedGraph(std::vector<int> degrees, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(degrees_.size()); }
    int degree(VertexId v) const;
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Number of (vertex, port) slots = 2 * edge_count; the state dimension.
    std::size_t slot_count() const { return offsets_.back(); }

    /// Linear index of (v, p) in the amplitude vector.
    std::size_t slot(VertexId v, Port p) const;

    /// First slot of vertex v; its ports occupy [slot_begin, slot_begin + degree).
    std::size_t slot_begin(VertexId v) const;

    /// Slot at the other end of the edge bound to `s`.
    std::size_t mate(std::size_t s) const { return mate_[s]; }

    bool contains(VertexId v) const { return v >= 0 && v < vertex_count(); }

private:
    std::vector<int> degrees_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;  // prefix sums of degrees, size V+1
    std::vector<std::size_t> mate_;     // slot -> slot, involution without fixed points
};

}  // namespace lingwalk
