#include "raagmcg/chains.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "doctest.h"

using namespace raagmcg;

TEST_CASE("recursion reproduces the closed form on the full grid") {
    ChainCalculator calc;
    for (int g = 0; g <= 12; ++g)
        for (int p = 0; p <= 24; ++p) {
            CAPTURE(g);
            CAPTURE(p);
            CHECK(calc.ell_recursive(Surface(g, p)) == ell_closed_form(Surface(g, p)));
        }
}

TEST_CASE("chained values: hand-checked") {
    ChainCalculator calc;
    CHECK(calc.chained_recursive(Surface(0, 0)) == 0);
    CHECK(calc.chained_recursive(Surface(0, 3)) == 0);
    CHECK(calc.chained_recursive(Surface(0, 4)) == 2);
    CHECK(calc.chained_recursive(Surface(1, 0)) == 0);  // closed: no arcs at all
    CHECK(calc.chained_recursive(Surface(2, 0)) == 0);
    CHECK(calc.chained_recursive(Surface(1, 1)) == 2);
    CHECK(calc.chained_recursive(Surface(1, 2)) == 3);
    CHECK(calc.chained_recursive(Surface(2, 1)) == 4);
    CHECK(calc.chained_recursive(Surface(0, 7)) == 5);
}

TEST_CASE("chained bound and equality region") {
    ChainCalculator calc;
    for (int g = 0; g <= 12; ++g)
        for (int p = 0; p <= 24; ++p) {
            const Surface s(g, p);
            const int chained = calc.chained_recursive(s);
            const int bound = f_closed_form(s);
            CAPTURE(g);
            CAPTURE(p);
            CHECK(chained <= bound);
            const bool tight = (g == 0 && p >= 4) || (g == 1 && p >= 1) || (g >= 2 && p >= 1);
            if (tight) CHECK(chained == bound);
        }
}

TEST_CASE("hand-checked chain lengths through the recursion") {
    ChainCalculator calc;
    CHECK(calc.ell_recursive(Surface(1, 0)) == 2);
    CHECK(calc.ell_recursive(Surface(2, 0)) == 5);
    CHECK(calc.ell_recursive(Surface(0, 5)) == 4);
    CHECK(calc.ell_recursive(Surface(1, 2)) == 4);
}

TEST_CASE("bounds traces justify their values step by step") {
    ChainCalculator calc;
    const Surface samples[] = {{0, 6}, {1, 3}, {2, 0}, {2, 3}, {3, 7}, {0, 4}, {1, 0}, {0, 2}};
    for (Surface s : samples) {
        const ChainBounds b = calc.bounds(s);
        CAPTURE(s.genus);
        CAPTURE(s.punctures);
        CHECK(b.surface == s);
        CHECK(b.ell == ell_closed_form(s));
        CHECK(b.chained == calc.chained_recursive(s));

        if (b.trace.empty()) {
            // base or sporadic value, nothing to justify
            CHECK((b.ell == 0 || b.ell == 2));
            continue;
        }

        // first step: a curve cut realizing ell = 2 + chained(component)
        const ChainStep& first = b.trace.front();
        CHECK(first.surface == s);
        const auto curve_cuts = enumerate_curve_cuts(s);
        CHECK(std::find(curve_cuts.begin(), curve_cuts.end(), first.cut) != curve_cuts.end());
        CHECK(std::find(first.cut.components.begin(), first.cut.components.end(),
                        first.component) != first.cut.components.end());
        CHECK(b.ell == 2 + calc.chained_recursive(first.component));

        // later steps: arc cuts dropping chained by exactly one
        for (std::size_t i = 1; i < b.trace.size(); ++i) {
            const ChainStep& step = b.trace[i];
            CHECK(step.surface == b.trace[i - 1].component);
            const auto arc_cuts = enumerate_arc_cuts(step.surface);
            CHECK(std::find(arc_cuts.begin(), arc_cuts.end(), step.cut) != arc_cuts.end());
            CHECK(std::find(step.cut.components.begin(), step.cut.components.end(),
                            step.component) != step.cut.components.end());
            CHECK(calc.chained_recursive(step.surface) ==
                  1 + calc.chained_recursive(step.component));
        }
        CHECK(calc.chained_recursive(b.trace.back().component) <= 2);
    }
}

TEST_CASE("grid verification") {
    ChainCalculator calc;
    const GridReport report = calc.verify_grid(12, 24);
    CHECK(report.cells == 13 * 25);
    CHECK(report.ok());
    CHECK(report.violations.empty());
}

TEST_CASE("calculator is safe under concurrent use") {
    ChainCalculator shared;
    std::vector<std::vector<int>> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&shared, &results, t] {
            for (int g = 0; g <= 8; ++g)
                for (int p = 0; p <= 12; ++p)
                    results[t].push_back(shared.ell_recursive(Surface(g, p)));
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);

    ChainCalculator serial;
    std::vector<int> expected;
    for (int g = 0; g <= 8; ++g)
        for (int p = 0; p <= 12; ++p) expected.push_back(serial.ell_recursive(Surface(g, p)));
    CHECK(results[0] == expected);
}
