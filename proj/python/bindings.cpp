#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lingwalk/analysis.hpp"
#include "lingwalk/engine.hpp"
#include "lingwalk/experiments.hpp"
#include "lingwalk/serialize.hpp"

namespace py = pybind11;
using namespace lingwalk;

namespace {

std::vector<std::vector<Amplitude>> matrix_rows(const CoinMatrix& c) {
    std::vector<std::vector<Amplitude>> rows(static_cast<std::size_t>(c.dim));
    for (int r = 0; r < c.dim; ++r) {
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(c.dim));
        for (int col = 0; col < c.dim; ++col)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = c.at(r, col);
    }
    return rows;
}

QuantumWord word_from_positions(const std::vector<std::pair<Amplitude, Amplitude>>& positions) {
    std::vector<SymbolWeights> weights;
    weights.reserve(positions.size());
    for (const auto& [a, b] : positions) weights.push_back({a, b});
    return QuantumWord(std::move(weights));
}

py::dict result_to_dict(const RunResult& r) {
    py::dict d;
    d["p_accept"] = r.p_accept;
    d["p_reject"] = r.p_reject;
    d["p_elsewhere"] = r.p_elsewhere;
    d["fidelity"] = r.fidelity ? py::cast(*r.fidelity) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_lingwalk, m) {
    m.doc() = "Coined discrete-time quantum walks that accept formal languages";
    m.attr("__version__") = "0.1.0";

    py::class_<Walk>(m, "Walk")
        .def_property_readonly("mode", [](const Walk& w) { return to_string(w.mode()); })
        .def_property_readonly("language",
                               [](const Walk& w) { return w.language().to_string(); })
        .def_property_readonly("steps", &Walk::steps)
        .def_property_readonly("input_length", &Walk::input_length)
        .def_property_readonly("vertex_count",
                               [](const Walk& w) { return w.graph().vertex_count(); })
        .def_property_readonly("edge_count",
                               [](const Walk& w) { return w.graph().edge_count(); })
        .def_property_readonly("accept_region", &Walk::accept_region)
        .def_property_readonly("reject_region", &Walk::reject_region)
        .def("to_json", &walk_to_json)
        .def_static("from_json", &walk_from_json)
        .def("__repr__", [](const Walk& w) {
            return "<Walk " + to_string(w.mode()) + " " + w.language().to_string() + " n=" +
                   std::to_string(w.input_length()) + " steps=" + std::to_string(w.steps()) +
                   ">";
        });

    m.def(
        "build_spatial",
        [](const std::string& language, int n) {
            return build_spatial(Language::parse(language), n);
        },
        py::arg("language"), py::arg("n"),
        "Star-funnel acceptor for the length-n word; 3 steps, Grover coins.");
    m.def(
        "build_sequential",
        [](const std::string& language, int n) {
            return build_sequential(Language::parse(language), n);
        },
        py::arg("language"), py::arg("n"),
        "Rail-splitter-merge acceptor for words of length <= n.");
    m.def("build_sequential_word", [](const std::string& w) { return build_sequential_word(w); },
          py::arg("word"), "Swap-coin acceptor for exactly `word`.");
    m.def("complement", &complement, py::arg("walk"),
          "Same walk with accept and reject regions swapped.");

    m.def(
        "run_word",
        [](const Walk& walk, const std::string& word) {
            return result_to_dict(run_word(walk, word));
        },
        py::arg("walk"), py::arg("word"),
        "Encode a classical word, run the prescribed steps, report probabilities.");
    m.def(
        "run_quantum",
        [](const Walk& walk, const std::vector<std::pair<Amplitude, Amplitude>>& positions) {
            return result_to_dict(run_input(walk, word_from_positions(positions)));
        },
        py::arg("walk"), py::arg("positions"),
        "Run a per-position (a, b) superposition input.");
    m.def(
        "superpose_words",
        [](const std::string& w1, const std::string& w2, double theta) {
            const QuantumWord word = superpose_words(w1, w2, theta);
            std::vector<std::pair<Amplitude, Amplitude>> out;
            for (const SymbolWeights& p : word.positions()) out.emplace_back(p.a, p.b);
            return out;
        },
        py::arg("w1"), py::arg("w2"), py::arg("theta"));

    m.def("verify_unitarity",
          [](const Walk& w) { return verify_unitarity(w.graph(), w.coins()); });

    m.def("grover_coin", [](int d) { return matrix_rows(grover_coin(d)); }, py::arg("d"));
    m.def("hadamard_merge_coin", []() { return matrix_rows(hadamard_merge_coin()); });
    m.def("conveyor_coin", []() { return matrix_rows(conveyor_coin()); });

    m.def(
        "target_word",
        [](const std::string& language, int n) -> py::object {
            const auto w = target_word(Language::parse(language), n);
            return w ? py::cast(*w) : py::none();
        },
        py::arg("language"), py::arg("n"));
    m.def(
        "membership",
        [](const std::string& language, const std::string& w) {
            return membership(Language::parse(language), w);
        },
        py::arg("language"), py::arg("word"));
    m.def(
        "reference_word",
        [](const std::string& language, int n) {
            return reference_word(Language::parse(language), n);
        },
        py::arg("language"), py::arg("n"));

    m.def("jaro", &jaro, py::arg("w1"), py::arg("w2"));
    m.def("enumerate_strings", &enumerate_strings, py::arg("count"));
    m.def("discrimination_success", &discrimination_success, py::arg("p_accept_a"),
          py::arg("p_accept_b"));
}
