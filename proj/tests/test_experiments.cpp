#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "lingwalk/csv.hpp"
#include "lingwalk/engine.hpp"
#include "lingwalk/experiments.hpp"
#include "lingwalk/svg.hpp"
#include "oracles.hpp"

using namespace lingwalk;

TEST_CASE("fidelity curve hits unity exactly on the language words") {
    SUBCASE("spatial eq") {
        const auto rows = exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 100);
        for (const FidelityRow& r : rows) {
            if (r.word == "ab" || r.word == "aabb" || r.word == "aaabbb") {
                CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));
                CHECK(r.jaro == doctest::Approx(1.0));
                CHECK(r.in_language);
            } else {
                CHECK(r.fidelity < 1.0 - 1e-9);
            }
        }
    }
    SUBCASE("sequential ab") {
        const auto rows = exp_fidelity_curve(Language::ab(), WalkMode::Sequential, 100);
        for (const FidelityRow& r : rows) {
            if (r.word == "ab" || r.word == "abab" || r.word == "ababab") {
                CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));
                CHECK(r.acceptance == doctest::Approx(1.0).epsilon(1e-9));
            } else {
                CHECK(r.fidelity < 1.0 - 1e-9);
            }
        }
    }
    SUBCASE("columns stay within [0, 1]") {
        for (const WalkMode mode : {WalkMode::Spatial, WalkMode::Sequential}) {
            const Language language = mode == WalkMode::Spatial ? Language::eq() : Language::ab();
            for (const FidelityRow& r : exp_fidelity_curve(language, mode, 126)) {
                for (const double value : {r.fidelity, r.jaro, r.acceptance}) {
                    CHECK(value >= 0.0);
                    CHECK(value <= 1.0 + 1e-12);
                }
            }
        }
    }
    SUBCASE("spatial fidelity equals acceptance row by row") {
        // The accept state is the uniform superposition the walk delivers, so
        // the two columns coincide for spatial walks.
        for (const FidelityRow& r : exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 30))
            CHECK(r.fidelity == doctest::Approx(r.acceptance).epsilon(1e-9));
    }
    SUBCASE("curve fidelity matches a fresh single-word run") {
        const auto rows = exp_fidelity_curve(Language::ab(), WalkMode::Sequential, 126);
        for (std::size_t i = 2; i < rows.size(); i += 6) {  // 20-odd spot checks
            const FidelityRow& r = rows[i];
            const Walk walk = build_sequential(Language::ab(), r.length);
            const RunResult fresh = run_word(walk, r.word);
            CHECK(r.fidelity == doctest::Approx(*fresh.fidelity).epsilon(1e-12));
            CHECK(r.acceptance == doctest::Approx(fresh.p_accept).epsilon(1e-12));
        }
    }
}

TEST_CASE("quantum input sweep") {
    const int grid = 5;
    const auto rows = exp_quantum_input("aabb", grid);
    CHECK(rows.size() == 15u * grid);

    SUBCASE("endpoints") {
        for (const QuantumInputRow& r : rows) {
            if (r.theta == 0.0) CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));
            if (r.other == "bbaa" && std::abs(r.theta - std::numbers::pi / 2) < 1e-12)
                CHECK(r.fidelity == doctest::Approx(0.0).epsilon(1e-9));
        }
    }
    SUBCASE("closed form and four-class grouping") {
        for (const QuantumInputRow& r : rows)
            CHECK(r.fidelity ==
                  doctest::Approx(oracles::quantum_input_cf(r.match_count, 4, r.theta))
                      .epsilon(1e-9));

        std::set<int> classes;
        for (const QuantumInputRow& r : rows) classes.insert(r.match_count);
        CHECK(classes == std::set<int>{0, 1, 2, 3});
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(exp_quantum_input("aab", 5), std::invalid_argument);
        CHECK_THROWS_AS(exp_quantum_input("aabb", 1), std::invalid_argument);
    }
}

TEST_CASE("bound sweeps") {
    SUBCASE("spatial eq") {
        const auto rows = exp_bound_sweep(Language::eq(), WalkMode::Spatial, 4);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].n == 2);
        CHECK(rows[0].max_accept == doctest::Approx(0.25).epsilon(1e-9));
        CHECK(rows[0].claim_met);  // 1/4 <= 2/4
        CHECK(rows[1].n == 4);
        CHECK(rows[1].max_accept == doctest::Approx(9.0 / 16.0).epsilon(1e-9));
        CHECK(!rows[1].claim_met);  // 9/16 > 2/16
        CHECK(rows[1].nonword_count == 15);
    }
    SUBCASE("sequential ab") {
        const auto rows = exp_bound_sweep(Language::ab(), WalkMode::Sequential, 4);
        REQUIRE(rows.size() == 4);
        CHECK(rows[3].n == 4);
        CHECK(rows[3].max_accept == doctest::Approx(0.75).epsilon(1e-9));
        CHECK(!rows[3].claim_met);
        // Lengths 1 and 2 sit exactly on the 1/2 claim.
        CHECK(rows[0].max_accept == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(rows[0].claim_met);
    }
    SUBCASE("closed-form cross-check at length 6") {
        const auto rows = exp_bound_sweep(Language::ab(), WalkMode::Sequential, 6);
        const BoundsRow& row6 = rows.back();
        CHECK(row6.n == 6);
        CHECK(row6.max_accept == doctest::Approx(5.0 / 6.0).epsilon(1e-9));  // two meets
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(exp_bound_sweep(Language::eq(), WalkMode::Spatial, 15),
                        std::invalid_argument);
    }
}

TEST_CASE("resource rows") {
    const auto rows = exp_resources(4);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].mode == "spatial");
    CHECK(rows[0].n == 2);
    CHECK(rows[0].nodes == 12);
    CHECK(rows[0].steps == 3);
    CHECK(*rows[0].paper_nodes == 11);
    CHECK(*rows[0].paper_steps == 3);

    const ResourceRow& word4 = rows[5];
    CHECK(word4.mode == "sequential_word");
    CHECK(word4.nodes == 8);
    CHECK(*word4.paper_nodes == 8);
    CHECK(*word4.paper_steps == 6);
}

TEST_CASE("discrimination sweep") {
    const auto rows = exp_discriminate("aabb", "bbaa", 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows.front().success == doctest::Approx(1.0).epsilon(1e-9));  // theta = 0
    CHECK(rows.back().success == doctest::Approx(1.0).epsilon(1e-9));   // theta = pi/2

    SUBCASE("identical words carry no information") {
        for (const DiscriminationRow& r : exp_discriminate("abab", "abab", 3))
            CHECK(r.success == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("classical endpoint for (aabb, abbb)") {
        const auto pair_rows = exp_discriminate("aabb", "abbb", 3);
        CHECK(pair_rows.front().p_accept_1 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(pair_rows.front().p_accept_2 == doctest::Approx(9.0 / 16.0).epsilon(1e-9));
        CHECK(pair_rows.front().success == doctest::Approx(0.71875).epsilon(1e-9));
    }
    SUBCASE("matches the spatial closed form across the grid") {
        // q differing positions: p1 = ((n-q) + q cos)^2/n^2, p2 with sin.
        const int q = oracles::hamming_mismatches("abba", "aabb");
        for (const DiscriminationRow& r : exp_discriminate("abba", "aabb", 9)) {
            const double p1 = oracles::quantum_input_cf(4 - q, 4, r.theta);
            const double p2 =
                oracles::quantum_input_cf(4 - q, 4, std::numbers::pi / 2 - r.theta);
            CHECK(r.p_accept_1 == doctest::Approx(p1).epsilon(1e-9));
            CHECK(r.p_accept_2 == doctest::Approx(p2).epsilon(1e-9));
        }
    }
}

TEST_CASE("csv rendering and parsing") {
    const auto rows = exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 10);
    const std::string csv = to_csv(rows, "fig2");
    CHECK(csv.rfind("# lingwalk v1 fig2\n", 0) == 0);

    const CsvTable table = parse_csv(csv);
    CHECK(table.experiment == "fig2");
    CHECK(table.columns.size() == 7);
    CHECK(table.rows.size() == 10);
    CHECK(table.rows[3][1] == "ab");
    CHECK(table.column_index("fidelity") == 3);

    CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("# lingwalk v1 fig2\nonly,a,header\n"), std::invalid_argument);
}

TEST_CASE("experiments are deterministic") {
    const std::string once = to_csv(exp_quantum_input("aabb", 7));
    const std::string twice = to_csv(exp_quantum_input("aabb", 7));
    CHECK(once == twice);

    const std::string svg_once = render_svg(once);
    const std::string svg_twice = render_svg(twice);
    CHECK(svg_once == svg_twice);
}

TEST_CASE("svg structure") {
    SUBCASE("fig2 has two polylines with one point per row") {
        const std::string csv = to_csv(exp_fidelity_curve(Language::eq(), WalkMode::Spatial, 20),
                                       "fig2");
        const std::string svg = render_svg(csv);
        std::size_t polylines = 0;
        for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
             pos = svg.find("<polyline", pos + 1))
            ++polylines;
        CHECK(polylines == 2);
        CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    }
    SUBCASE("fig5 has fifteen polylines") {
        const std::string svg = render_svg(to_csv(exp_quantum_input("aabb", 5)));
        std::size_t polylines = 0;
        for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
             pos = svg.find("<polyline", pos + 1))
            ++polylines;
        CHECK(polylines == 15);
    }
    SUBCASE("malformed csv is rejected") {
        CHECK_THROWS_AS(render_svg("not a csv"), std::invalid_argument);
    }
}

TEST_CASE("run results cross-check against analysis fidelity") {
    const Walk walk = build_spatial(Language::eq(), 4);
    const ArcState phi = spatial_accepting_state(walk);
    oracles::TestRng rng(0x800);
    for (int trial = 0; trial < 20; ++trial) {
        std::string word(4, 'a');
        for (char& c : word) c = rng.below(2) ? 'b' : 'a';
        const RunResult r = run_word(walk, word);
        const ArcState psi =
            finish(walk, encode_spatial(walk, QuantumWord::classical(word)));
        CHECK(*r.fidelity == doctest::Approx(fidelity(psi, phi)).epsilon(1e-12));
    }
}
