#include "lingwalk/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace lingwalk {

namespace {

using Json = nlohmann::ordered_json;

Json amplitude_to_json(const Amplitude& z) { return Json::array({z.real(), z.imag()}); }

Amplitude amplitude_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("walk json: complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json coin_to_json(const CoinSpec& coin) {
    Json j;
    switch (coin.kind) {
        case CoinKind::Grover:
            j["type"] = "grover";
            break;
        case CoinKind::HadamardMerge:
            j["type"] = "hadamard_merge";
            break;
        case CoinKind::Conveyor:
            j["type"] = "conveyor";
            break;
        case CoinKind::Identity:
            j["type"] = "identity";
            break;
        case CoinKind::PortPermutation: {
            j["type"] = "permutation";
            j["perm"] = coin.perm;
            Json phases = Json::array();
            for (const Amplitude& p : coin.phases) phases.push_back(amplitude_to_json(p));
            j["phases"] = std::move(phases);
            break;
        }
        case CoinKind::Custom: {
            j["type"] = "custom";
            Json rows = Json::array();
            for (int r = 0; r < coin.dim; ++r) {
                Json row = Json::array();
                for (int c = 0; c < coin.dim; ++c)
                    row.push_back(amplitude_to_json(
                        coin.matrix[static_cast<std::size_t>(r) * coin.dim + c]));
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
            break;
        }
    }
    return j;
}

CoinSpec coin_from_json(const Json& j, int degree) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "grover") return CoinSpec::grover(degree);
    if (type == "hadamard_merge") return CoinSpec::hadamard_merge();
    if (type == "conveyor") return CoinSpec::conveyor();
    if (type == "identity") return CoinSpec::identity(degree);
    if (type == "permutation") {
        std::vector<int> perm = j.at("perm").get<std::vector<int>>();
        std::vector<Amplitude> phases;
        for (const Json& p : j.at("phases")) phases.push_back(amplitude_from_json(p));
        return CoinSpec::permutation(std::move(perm), std::move(phases));
    }
    if (type == "custom") {
        const Json& rows = j.at("matrix");
        std::vector<Amplitude> m;
        for (const Json& row : rows)
            for (const Json& cell : row) m.push_back(amplitude_from_json(cell));
        return CoinSpec::custom(degree, std::move(m));
    }
    throw std::invalid_argument("walk json: unknown coin type '" + type + "'");
}

}  // namespace

std::string walk_to_json(const Walk& walk) {
    Json j;
    j["version"] = 1;
    Json vertices = Json::array();
    for (int v = 0; v < walk.graph().vertex_count(); ++v) {
        Json vertex;
        vertex["id"] = v;
        vertex["degree"] = walk.graph().degree(v);
        vertex["coin"] = coin_to_json(walk.coins()[static_cast<std::size_t>(v)]);
        vertices.push_back(std::move(vertex));
    }
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const Edge& e : walk.graph().edges())
        edges.push_back(Json::array({e.a.vertex, e.a.port, e.b.vertex, e.b.port}));
    j["edges"] = std::move(edges);
    j["accept"] = walk.accept_region();
    j["reject"] = walk.reject_region();
    Json input_map = Json::array();
    for (const InputSlots& s : walk.input_map())
        input_map.push_back(Json::array(
            {Json::array({s.a_slot.vertex, s.a_slot.port}),
             Json::array({s.b_slot.vertex, s.b_slot.port})}));
    j["input_map"] = std::move(input_map);
    j["steps"] = walk.steps();
    j["mode"] = to_string(walk.mode());
    j["language"] = walk.language().to_string();
    j["input_length"] = walk.input_length();
    return j.dump(2) + "\n";
}

Walk walk_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("walk json: parse error: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != 1)
            throw std::invalid_argument("walk json: unsupported version");

        std::vector<int> degrees;
        std::vector<Json> coin_specs;
        for (const Json& vj : j.at("vertices")) {
            const int id = vj.at("id").get<int>();
            if (id != static_cast<int>(degrees.size()))
                throw std::invalid_argument("walk json: vertex ids must be 0..V-1 in order");
            degrees.push_back(vj.at("degree").get<int>());
            coin_specs.push_back(vj.at("coin"));
        }

        std::vector<Edge> edges;
        for (const Json& ej : j.at("edges")) {
            if (!ej.is_array() || ej.size() != 4)
                throw std::invalid_argument("walk json: edges are [v,a,u,b]");
            edges.push_back({{ej[0].get<int>(), ej[1].get<int>()},
                             {ej[2].get<int>(), ej[3].get<int>()}});
        }

        CoinTable coins;
        for (std::size_t v = 0; v < coin_specs.size(); ++v)
            coins.push_back(coin_from_json(coin_specs[v], degrees[v]));

        std::vector<InputSlots> input_map;
        for (const Json& sj : j.at("input_map")) {
            if (!sj.is_array() || sj.size() != 2)
                throw std::invalid_argument("walk json: input_map entries are [[v,p],[u,q]]");
            input_map.push_back({{sj[0][0].get<int>(), sj[0][1].get<int>()},
                                 {sj[1][0].get<int>(), sj[1][1].get<int>()}});
        }

        return Walk(PortedGraph(std::move(degrees), std::move(edges)), std::move(coins),
                    std::move(input_map), j.at("accept").get<std::vector<VertexId>>(),
                    j.at("reject").get<std::vector<VertexId>>(), j.at("steps").get<int>(),
                    walk_mode_from_string(j.at("mode").get<std::string>()),
                    Language::parse(j.at("language").get<std::string>()),
                    j.at("input_length").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("walk json: ") + e.what());
    }
}

}  // namespace lingwalk
