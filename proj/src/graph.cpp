#include "lingwalk/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lingwalk {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("graph: " + what); }

}  // namespace

PortedGraph::PortedGraph(std::vector<int> degrees, std::vector<Edge> edges)
    : degrees_(std::move(degrees)), edges_(std::move(edges)) {
    const int n = static_cast<int>(degrees_.size());
    if (n == 0) fail("no vertices");
    offsets_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (degrees_[v] < 1) fail("vertex " + std::to_string(v) + " has degree < 1");
        offsets_[v + 1] = offsets_[v] + static_cast<std::size_t>(degrees_[v]);
    }

    const std::size_t slots = offsets_[n];
    if (edges_.size() * 2 != slots) fail("port-end count does not match 2 * edge count");

    mate_.assign(slots, slots);  // `slots` marks unbound
    auto bind = [&](const PortEnd& x, const PortEnd& y) {
        if (!contains(x.vertex)) fail("edge names unknown vertex " + std::to_string(x.vertex));
        if (x.port < 0 || x.port >= degrees_[x.vertex])
            fail("port " + std::to_string(x.port) + " out of range at vertex " +
                 std::to_string(x.vertex));
        const std::size_t s = slot(x.vertex, x.port);
        if (mate_[s] != slots)
            fail("port-end (" + std::to_string(x.vertex) + "," + std::to_string(x.port) +
                 ") bound twice");
        mate_[s] = slot(y.vertex, y.port);
    };
    for (const Edge& e : edges_) {
        if (e.a == e.b) fail("edge binds a port-end to itself");
        // Validate `b` lazily through the mate assignment of `a` and vice versa;
        // range checks happen inside bind for both ends.
        if (!contains(e.b.vertex) || e.b.port < 0 || e.b.port >= degrees_[e.b.vertex])
            fail("edge names an out-of-range port-end");
        bind(e.a, e.b);
        bind(e.b, e.a);
    }
    for (std::size_t s = 0; s < slots; ++s)
        if (mate_[s] == slots) fail("port-end " + std::to_string(s) + " is unbound");
}

int PortedGraph::degree(VertexId v) const {
    if (!contains(v)) fail("unknown vertex " + std::to_string(v));
    return degrees_[v];
}

std::size_t PortedGraph::slot(VertexId v, Port p) const {
    return offsets_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(p);
}

std::size_t PortedGraph::slot_begin(VertexId v) const {
    return offsets_[static_cast<std::size_t>(v)];
}

}  // namespace lingwalk
