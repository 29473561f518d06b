#include "raagmcg/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace raagmcg {

Surface::Surface(int g, int p) : genus(g), punctures(p) {
    if (g < 0 || p < 0)
        throw std::invalid_argument("surface: genus and punctures must be non-negative");
}

std::string to_string(Surface s) {
    return "S_{" + std::to_string(s.genus) + "," + std::to_string(s.punctures) + "}";
}

int euler_characteristic(Surface s) { return 2 - 2 * s.genus - s.punctures; }

int xi(Surface s) { return 3 * s.genus - 3 + s.punctures; }

int ell_closed_form(Surface s) {
    const int g = s.genus, p = s.punctures;
    if (g == 0 && p <= 3) return 0;
    if ((g == 0 && p == 4) || (g == 1 && p <= 1)) return 2;
    if (g == 0) return p - 1;        // p >= 5
    if (g == 1) return p + 2;        // p >= 2
    return 2 * g + p + 1;            // g >= 2
}

int f_closed_form(Surface s) {
    const int g = s.genus, p = s.punctures;
    if (g == 0) return std::max(0, p - 2);
    if (g == 1) return p + 1;
    return 2 * g + p - 1;
}

std::string to_string(CutKind k) {
    switch (k) {
        case CutKind::NonSeparatingCurve: return "NonSeparatingCurve";
        case CutKind::SeparatingCurve: return "SeparatingCurve";
        case CutKind::NonSeparatingArcGenusReducing: return "NonSeparatingArcGenusReducing";
        case CutKind::NonSeparatingArcGenusPreserving: return "NonSeparatingArcGenusPreserving";
        case CutKind::SeparatingArc: return "SeparatingArc";
    }
    return "?";
}

std::vector<CutOutcome> enumerate_curve_cuts(Surface s) {
    const int g = s.genus, p = s.punctures;
    std::vector<CutOutcome> out;

    // Non-separating: regluing sides become two new boundary circles.
    if (g >= 1)
        out.push_back({CutKind::NonSeparatingCurve, {Surface(g - 1, p + 2)}});

    // Separating: genus splits, punctures split, each side gains one boundary
    // circle. A side of genus 0 needs >= 3 punctures or the curve would bound
    // a disk or be puncture-parallel (not essential).
    std::set<std::pair<Surface, Surface>> seen;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (int p1 = 1; p1 <= p + 1; ++p1) {
            const int p2 = p + 2 - p1;
            if (p2 < 1) continue;
            if (g1 == 0 && p1 < 3) continue;
            if (g2 == 0 && p2 < 3) continue;
            Surface a(g1, p1), b(g2, p2);
            if (b < a) std::swap(a, b);
            if (seen.insert({a, b}).second)
                out.push_back({CutKind::SeparatingCurve, {a, b}});
        }
    }
    return out;
}

std::vector<CutOutcome> enumerate_arc_cuts(Surface s) {
    const int g = s.genus, p = s.punctures;
    std::vector<CutOutcome> out;
    if (p < 1) return out;  // an arc needs boundary to start and end on

    // Non-separating arc through a handle: genus drops, the two arc copies
    // merge boundary into one extra circle.
    if (g >= 1)
        out.push_back({CutKind::NonSeparatingArcGenusReducing, {Surface(g - 1, p + 1)}});

    // Non-separating arc joining two distinct punctures: they merge into one.
    if (p >= 2)
        out.push_back({CutKind::NonSeparatingArcGenusPreserving, {Surface(g, p - 1)}});

    // Separating arc: a planar side needs >= 2 punctures or the arc is
    // boundary-parallel.
    std::set<std::pair<Surface, Surface>> seen;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (int p1 = 1; p1 <= p; ++p1) {
            const int p2 = p + 1 - p1;
            if (p2 < 1) continue;
            if (g1 == 0 && p1 < 2) continue;
            if (g2 == 0 && p2 < 2) continue;
            Surface a(g1, p1), b(g2, p2);
            if (b < a) std::swap(a, b);
            if (seen.insert({a, b}).second)
                out.push_back({CutKind::SeparatingArc, {a, b}});
        }
    }
    return out;
}

}  // namespace raagmcg
