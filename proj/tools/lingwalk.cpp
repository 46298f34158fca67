// lingwalk: build, run and sweep coined-quantum-walk language acceptors.
//
// Subcommands: build, run, fig2, fig4, fig5, bounds, resources, discriminate,
// plot. Exit code 0 on success, 2 on validation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lingwalk/csv.hpp"
#include "lingwalk/engine.hpp"
#include "lingwalk/experiments.hpp"
#include "lingwalk/serialize.hpp"
#include "lingwalk/svg.hpp"

namespace {

using namespace lingwalk;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

void emit_with_svg(const std::string& csv, const std::string& out_path,
                   const std::string& svg_path) {
    emit(csv, out_path);
    if (!svg_path.empty()) write_file(svg_path, render_svg(csv));
}

Walk build_from_options(const std::string& language_text, const std::string& mode_text,
                        int length) {
    const Language language = Language::parse(language_text);
    const WalkMode mode = walk_mode_from_string(mode_text);
    if (language.kind == Language::Kind::Word) {
        const int n = static_cast<int>(language.word.size());
        if (length > 0 && length != n)
            throw std::invalid_argument("--length disagrees with the word's length");
        return mode == WalkMode::Spatial ? build_spatial(language, n)
                                         : build_sequential_word(language.word);
    }
    if (length <= 0) throw std::invalid_argument("--length is required for eq/ab");
    return mode == WalkMode::Spatial ? build_spatial(language, length)
                                     : build_sequential(language, length);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined quantum walk acceptors: builders, runs and experiment sweeps"};
    app.require_subcommand(1);

    std::string language = "eq";
    std::string mode = "spatial";
    std::string out_path;
    std::string svg_path;
    std::string graph_path;
    std::string input_word;
    bool input_given = false;
    std::string base = "aabb";
    std::string w1, w2;
    std::string in_path;
    std::string emit_path;
    int length = 0;
    int count = 200;
    int grid = 101;

    auto* build = app.add_subcommand("build", "build a walk and emit its JSON description");
    build->add_option("--language", language, "eq, ab or word:<w>");
    build->add_option("--mode", mode, "spatial or sequential");
    build->add_option("--length", length, "input length n");
    build->add_option("--emit", emit_path, "write the walk JSON here");

    auto* run = app.add_subcommand("run", "run one input through a walk");
    run->add_option("--graph", graph_path, "walk JSON written by build --emit");
    run->add_option("--language", language, "eq, ab or word:<w> (without --graph)");
    run->add_option("--mode", mode, "spatial or sequential (without --graph)");
    run->add_option("--length", length, "input length n (without --graph)");
    run->add_option("--input", input_word, "word over {a,b}; defaults to the target word");
    run->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* fig2 = app.add_subcommand("fig2", "fidelity/jaro curve, spatial walks");
    fig2->add_option("--language", language, "eq (default) or ab");
    fig2->add_option("--count", count, "number of enumerated strings");
    fig2->add_option("--out", out_path, "CSV output path (default stdout)");
    fig2->add_option("--svg", svg_path, "also render a chart here");

    auto* fig4 = app.add_subcommand("fig4", "fidelity/jaro curve, sequential walks");
    std::string fig4_language = "ab";
    fig4->add_option("--language", fig4_language, "ab (default) or eq");
    fig4->add_option("--count", count, "number of enumerated strings");
    fig4->add_option("--out", out_path, "CSV output path (default stdout)");
    fig4->add_option("--svg", svg_path, "also render a chart here");

    auto* fig5 = app.add_subcommand("fig5", "quantum-input fidelity sweep");
    fig5->add_option("--base", base, "even-length base word (default aabb)");
    fig5->add_option("--grid", grid, "theta grid size on [0, pi/2]");
    fig5->add_option("--out", out_path, "CSV output path (default stdout)");
    fig5->add_option("--svg", svg_path, "also render a chart here");

    auto* bounds = app.add_subcommand("bounds", "exhaustive worst-case non-word acceptance");
    std::string bounds_mode = "both";
    bounds->add_option("--mode", bounds_mode, "spatial, sequential or both (default)");
    bounds->add_option("--language", language, "language for a single-mode sweep");
    int bounds_len = 10;
    bounds->add_option("--length", bounds_len, "max input length (<= 14)");
    bounds->add_option("--out", out_path, "CSV output path (default stdout)");
    bounds->add_option("--svg", svg_path, "also render a chart here");

    auto* resources = app.add_subcommand("resources", "node/step counts per length");
    int resources_len = 8;
    resources->add_option("--length", resources_len, "max input length");
    resources->add_option("--out", out_path, "CSV output path (default stdout)");
    resources->add_option("--svg", svg_path, "also render a chart here");

    auto* discriminate = app.add_subcommand("discriminate", "two-input state discrimination");
    discriminate->add_option("--w1", w1, "first word (the walk accepts this one)")->required();
    discriminate->add_option("--w2", w2, "second word, same length")->required();
    discriminate->add_option("--grid", grid, "theta grid size on [0, pi/2]");
    discriminate->add_option("--out", out_path, "CSV output path (default stdout)");
    discriminate->add_option("--svg", svg_path, "also render a chart here");

    auto* plot = app.add_subcommand("plot", "render an experiment CSV as an SVG chart");
    plot->add_option("--in", in_path, "experiment CSV path")->required();
    plot->add_option("--svg", svg_path, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            const Walk walk = build_from_options(language, mode, length);
            const double residual = verify_unitarity(walk.graph(), walk.coins());
            std::cout << "vertices=" << walk.graph().vertex_count()
                      << " edges=" << walk.graph().edge_count() << " steps=" << walk.steps()
                      << " unitarity_residual=" << format_double(residual) << "\n";
            if (!emit_path.empty()) write_file(emit_path, walk_to_json(walk));
        } else if (run->parsed()) {
            std::optional<Walk> walk;
            if (!graph_path.empty())
                walk = walk_from_json(read_file(graph_path));
            else
                walk = build_from_options(language, mode, length);

            input_given = run->count("--input") > 0;
            if (!input_given) {
                const auto target = target_word(walk->language(), walk->input_length());
                if (!target)
                    throw std::invalid_argument(
                        "walk has no target word; provide --input explicitly");
                input_word = *target;
            }
            std::string csv = "# lingwalk v1 run\n";
            csv += "input,p_accept,p_reject,p_elsewhere,fidelity,in_language\n";
            if (input_word.empty()) {
                // Empty word: accepted by convention, no walk is run; this is
                // distinct from a walk rejecting all amplitude.
                const double p = membership(walk->language(), "") ? 1.0 : 0.0;
                csv += "," + format_double(p) + "," + format_double(1.0 - p) + ",0,," +
                       (membership(walk->language(), "") ? "1" : "0") + "\n";
            } else {
                const RunResult result = run_word(*walk, input_word);
                csv += input_word + "," + format_double(result.p_accept) + "," +
                       format_double(result.p_reject) + "," +
                       format_double(result.p_elsewhere) + ",";
                if (result.fidelity) csv += format_double(*result.fidelity);
                csv += std::string(",") + (membership(walk->language(), input_word) ? "1" : "0") +
                       "\n";
            }
            emit(csv, out_path);
        } else if (fig2->parsed()) {
            const auto rows =
                exp_fidelity_curve(Language::parse(language), WalkMode::Spatial, count);
            emit_with_svg(to_csv(rows, "fig2"), out_path, svg_path);
        } else if (fig4->parsed()) {
            const auto rows =
                exp_fidelity_curve(Language::parse(fig4_language), WalkMode::Sequential, count);
            emit_with_svg(to_csv(rows, "fig4"), out_path, svg_path);
        } else if (fig5->parsed()) {
            emit_with_svg(to_csv(exp_quantum_input(base, grid)), out_path, svg_path);
        } else if (bounds->parsed()) {
            if (bounds_mode != "spatial" && bounds_mode != "sequential" &&
                bounds_mode != "both")
                throw std::invalid_argument("bounds: --mode must be spatial, sequential or both");
            std::vector<BoundsRow> rows;
            if (bounds_mode == "spatial" || bounds_mode == "both") {
                const Language lang = bounds->count("--language") > 0
                                          ? Language::parse(language)
                                          : Language::eq();
                auto part = exp_bound_sweep(lang, WalkMode::Spatial, bounds_len);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            if (bounds_mode == "sequential" || bounds_mode == "both") {
                const Language lang = bounds->count("--language") > 0
                                          ? Language::parse(language)
                                          : Language::ab();
                auto part = exp_bound_sweep(lang, WalkMode::Sequential, bounds_len);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            emit_with_svg(to_csv(rows), out_path, svg_path);
        } else if (resources->parsed()) {
            emit_with_svg(to_csv(exp_resources(resources_len)), out_path, svg_path);
        } else if (discriminate->parsed()) {
            emit_with_svg(to_csv(exp_discriminate(w1, w2, grid)), out_path, svg_path);
        } else if (plot->parsed()) {
            write_file(svg_path, render_svg(read_file(in_path)));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
