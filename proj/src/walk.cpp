#include "lingwalk/walk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lingwalk/engine.hpp"

namespace lingwalk {

std::string to_string(WalkMode mode) {
    return mode == WalkMode::Spatial ? "spatial" : "sequential";
}

WalkMode walk_mode_from_string(std::string_view text) {
    if (text == "spatial") return WalkMode::Spatial;
    if (text == "sequential") return WalkMode::Sequential;
    throw std::invalid_argument("unknown walk mode: " + std::string(text));
}

Walk::Walk(PortedGraph graph, CoinTable coins, std::vector<InputSlots> input_map,
           std::vector<VertexId> accept_region, std::vector<VertexId> reject_region, int steps,
           WalkMode mode, Language language, int input_length)
    : graph_(std::move(graph)),
      coins_(std::move(coins)),
      input_map_(std::move(input_map)),
      accept_region_(std::move(accept_region)),
      reject_region_(std::move(reject_region)),
      steps_(steps),
      mode_(mode),
      language_(std::move(language)),
      input_length_(input_length) {
    if (steps_ < 0) throw std::invalid_argument("walk: negative step count");
    if (input_length_ < 0) throw std::invalid_argument("walk: negative input length");

    const double residual = verify_unitarity(graph_, coins_);
    if (residual >= kUnitaryTol)
        throw std::invalid_argument("walk: coin table is not unitary (residual " +
                                    std::to_string(residual) + ")");

    auto check_region = [&](const std::vector<VertexId>& region, const char* name) {
        for (VertexId v : region)
            if (!graph_.contains(v))
                throw std::invalid_argument(std::string("walk: ") + name +
                                            " region names unknown vertex");
    };
    check_region(accept_region_, "accept");
    check_region(reject_region_, "reject");
    for (VertexId v : accept_region_)
        if (std::find(reject_region_.begin(), reject_region_.end(), v) != reject_region_.end())
            throw std::invalid_argument("walk: accept and reject regions overlap");

    if (static_cast<int>(input_map_.size()) != input_length_)
        throw std::invalid_argument("walk: input map does not cover every position");
    std::set<std::pair<VertexId, Port>> seen;
    for (const InputSlots& slots : input_map_) {
        for (const PortEnd& end : {slots.a_slot, slots.b_slot}) {
            if (!graph_.contains(end.vertex) || end.port < 0 ||
                end.port >= graph_.degree(end.vertex))
                throw std::invalid_argument("walk: input map names an invalid port-end");
            if (!seen.insert({end.vertex, end.port}).second)
                throw std::invalid_argument("walk: input map reuses a port-end");
        }
    }

    compiled_.reserve(coins_.size());
    for (const CoinSpec& spec : coins_) compiled_.push_back(spec.realize());
}

Walk complement(const Walk& walk) {
    if (walk.reject_region().empty())
        throw std::invalid_argument("complement: walk has no reject region to invert");
    return Walk(walk.graph(), walk.coins(), walk.input_map(), walk.reject_region(),
                walk.accept_region(), walk.steps(), walk.mode(), walk.language(),
                walk.input_length());
}

}  // namespace lingwalk
