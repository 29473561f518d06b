#include "raagmcg/surface.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

using namespace raagmcg;

namespace {

// ---- oracles ------------------------------------------------------------
// Cut outcomes re-derived from Euler characteristic bookkeeping and endpoint
// case analysis, not from the per-kind genus formulas.

using Outcome = std::vector<Surface>;

bool banned_curve_side(Surface s) {
    // disk or once-punctured sphere side: the curve bounds a disk or is
    // puncture-parallel, hence inessential
    return s.genus == 0 && s.punctures <= 2;
}

std::set<Outcome> oracle_curve_cuts(Surface s) {
    std::set<Outcome> out;
    // connected result: chi preserved, two new punctures; genus solves
    // 2 - 2g' - (p + 2) = 2 - 2g - p
    if (s.genus >= 1) out.insert({Surface(s.genus - 1, s.punctures + 2)});
    // separating: one new puncture per side, old punctures split a | p - a
    for (int g1 = 0; g1 <= s.genus; ++g1)
        for (int a = 0; a <= s.punctures; ++a) {
            Surface s1(g1, a + 1), s2(s.genus - g1, s.punctures - a + 1);
            if (banned_curve_side(s1) || banned_curve_side(s2)) continue;
            if (s2 < s1) std::swap(s1, s2);
            out.insert({s1, s2});
        }
    return out;
}

std::set<Outcome> oracle_arc_cuts(Surface s) {
    std::set<Outcome> out;
    if (s.punctures < 1) return out;  // arcs end on punctures
    // endpoints on two distinct punctures: they merge, the result is connected
    if (s.punctures >= 2) out.insert({Surface(s.genus, s.punctures - 1)});
    // both endpoints on one puncture, result connected: chi rises by one at
    // fixed puncture count + 1, so the genus drops
    if (s.genus >= 1) out.insert({Surface(s.genus - 1, s.punctures + 1)});
    // both endpoints on one puncture, separating: that puncture contributes
    // one boundary to each side, the rest split a | p - 1 - a
    for (int g1 = 0; g1 <= s.genus; ++g1)
        for (int a = 0; a <= s.punctures - 1; ++a) {
            Surface s1(g1, a + 1), s2(s.genus - g1, s.punctures - 1 - a + 1);
            if ((s1.genus == 0 && s1.punctures < 2) || (s2.genus == 0 && s2.punctures < 2))
                continue;  // a disk side makes the arc boundary-parallel
            if (s2 < s1) std::swap(s1, s2);
            out.insert({s1, s2});
        }
    return out;
}

std::set<Outcome> component_sets(const std::vector<CutOutcome>& cuts) {
    std::set<Outcome> out;
    for (const CutOutcome& c : cuts) out.insert(c.components);
    return out;
}

}  // namespace

TEST_CASE("surface basics") {
    CHECK(to_string(Surface(2, 0)) == "S_{2,0}");
    CHECK(to_string(Surface(0, 13)) == "S_{0,13}");
    CHECK_THROWS_AS(Surface(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Surface(0, -2), std::invalid_argument);
    CHECK(Surface(1, 2) == Surface(1, 2));
    CHECK(Surface(0, 5) < Surface(1, 0));
}

TEST_CASE("euler characteristic and complexity") {
    CHECK(euler_characteristic(Surface(0, 0)) == 2);
    CHECK(euler_characteristic(Surface(1, 0)) == 0);
    CHECK(euler_characteristic(Surface(0, 3)) == -1);
    CHECK(euler_characteristic(Surface(2, 3)) == -5);
    CHECK(xi(Surface(0, 4)) == 1);
    CHECK(xi(Surface(1, 1)) == 1);
    CHECK(xi(Surface(2, 0)) == 3);
    CHECK(xi(Surface(0, 3)) == 0);
    CHECK(xi(Surface(3, 5)) == 11);
}

TEST_CASE("maximal chain length closed form") {
    // sporadic small cases
    for (int p = 0; p <= 3; ++p) CHECK(ell_closed_form(Surface(0, p)) == 0);
    CHECK(ell_closed_form(Surface(0, 4)) == 2);
    CHECK(ell_closed_form(Surface(1, 0)) == 2);
    CHECK(ell_closed_form(Surface(1, 1)) == 2);
    // punctured spheres
    CHECK(ell_closed_form(Surface(0, 5)) == 4);
    CHECK(ell_closed_form(Surface(0, 6)) == 5);
    CHECK(ell_closed_form(Surface(0, 9)) == 8);
    // tori
    CHECK(ell_closed_form(Surface(1, 2)) == 4);
    CHECK(ell_closed_form(Surface(1, 5)) == 7);
    // higher genus
    CHECK(ell_closed_form(Surface(2, 0)) == 5);
    CHECK(ell_closed_form(Surface(2, 1)) == 6);
    CHECK(ell_closed_form(Surface(3, 4)) == 11);
    CHECK(ell_closed_form(Surface(5, 7)) == 18);
}

TEST_CASE("chained-pair bound closed form") {
    CHECK(f_closed_form(Surface(0, 0)) == 0);
    CHECK(f_closed_form(Surface(0, 2)) == 0);
    CHECK(f_closed_form(Surface(0, 3)) == 1);
    CHECK(f_closed_form(Surface(0, 5)) == 3);
    CHECK(f_closed_form(Surface(1, 0)) == 1);
    CHECK(f_closed_form(Surface(1, 3)) == 4);
    CHECK(f_closed_form(Surface(2, 0)) == 3);
    CHECK(f_closed_form(Surface(3, 2)) == 7);
}

TEST_CASE("curve cuts: hand-checked small surfaces") {
    CHECK(enumerate_curve_cuts(Surface(0, 3)).empty());
    CHECK(enumerate_curve_cuts(Surface(0, 0)).empty());

    // torus: only a non-separating curve, yielding an annulus
    CHECK(component_sets(enumerate_curve_cuts(Surface(1, 0))) ==
          std::set<Outcome>{{Surface(0, 2)}});

    // closed genus 2: non-separating, or two one-holed tori
    CHECK(component_sets(enumerate_curve_cuts(Surface(2, 0))) ==
          std::set<Outcome>{{Surface(1, 2)}, {Surface(1, 1), Surface(1, 1)}});

    // five-punctured sphere: the 2|3 split only
    CHECK(component_sets(enumerate_curve_cuts(Surface(0, 5))) ==
          std::set<Outcome>{{Surface(0, 3), Surface(0, 4)}});

    CHECK(component_sets(enumerate_curve_cuts(Surface(1, 2))) ==
          std::set<Outcome>{{Surface(0, 4)}, {Surface(0, 3), Surface(1, 1)}});
}

TEST_CASE("arc cuts: hand-checked small surfaces") {
    CHECK(enumerate_arc_cuts(Surface(3, 0)).empty());  // no punctures, no arcs
    CHECK(enumerate_arc_cuts(Surface(0, 1)).empty());  // every arc bounds a disk

    // one-holed torus: the non-separating arc only
    CHECK(component_sets(enumerate_arc_cuts(Surface(1, 1))) ==
          std::set<Outcome>{{Surface(0, 2)}});

    CHECK(component_sets(enumerate_arc_cuts(Surface(0, 4))) ==
          std::set<Outcome>{{Surface(0, 3)}, {Surface(0, 2), Surface(0, 3)}});

    CHECK(component_sets(enumerate_arc_cuts(Surface(1, 2))) ==
          std::set<Outcome>{
              {Surface(1, 1)},                  // join the two punctures
              {Surface(0, 3)},                  // genus-reducing
              {Surface(0, 2), Surface(1, 1)},   // separating
          });
}

TEST_CASE("cut enumerations match the bookkeeping oracle on a grid") {
    for (int g = 0; g <= 6; ++g)
        for (int p = 0; p <= 9; ++p) {
            const Surface s(g, p);
            CAPTURE(g);
            CAPTURE(p);
            CHECK(component_sets(enumerate_curve_cuts(s)) == oracle_curve_cuts(s));
            CHECK(component_sets(enumerate_arc_cuts(s)) == oracle_arc_cuts(s));
        }
}

TEST_CASE("cut outcome properties across the grid") {
    for (int g = 0; g <= 12; ++g)
        for (int p = 0; p <= 24; ++p) {
            const Surface s(g, p);
            const int chi = euler_characteristic(s);
            const auto curves = enumerate_curve_cuts(s);
            const auto arcs = enumerate_arc_cuts(s);
            CAPTURE(g);
            CAPTURE(p);

            std::set<std::pair<CutKind, Outcome>> seen;
            for (const CutOutcome& c : curves) {
                int total = 0;
                for (Surface comp : c.components) {
                    total += euler_characteristic(comp);
                    CHECK(comp.punctures >= 1);  // every piece keeps a cut boundary
                }
                CHECK(total == chi);
                CHECK(seen.insert({c.kind, c.components}).second);
                CHECK(std::is_sorted(c.components.begin(), c.components.end()));
            }
            for (const CutOutcome& a : arcs) {
                int total = 0;
                for (Surface comp : a.components) {
                    total += euler_characteristic(comp);
                    CHECK(comp.punctures >= 1);
                }
                CHECK(total == chi + 1);
                CHECK(seen.insert({a.kind, a.components}).second);
            }

            const bool has_nonsep =
                std::any_of(curves.begin(), curves.end(), [](const CutOutcome& c) {
                    return c.kind == CutKind::NonSeparatingCurve;
                });
            CHECK(has_nonsep == (g >= 1));
            if (p == 0) CHECK(arcs.empty());
            if (g == 0 && p <= 3) CHECK(curves.empty());
            if (g >= 1 || p >= 4) CHECK(!curves.empty());
        }
}
