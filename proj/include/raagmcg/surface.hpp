#pragma once

#include <compare>
#include <string>
#include <vector>

namespace raagmcg {

// Orientable surface S_{g,p}: genus g, p punctures. Punctures and boundary
// components are interchangeable for every quantity computed here.
struct Surface {
    int genus = 0;
    int punctures = 0;

    Surface() = default;
    Surface(int g, int p);

    auto operator<=>(const Surface&) const = default;
};

std::string to_string(Surface s);

int euler_characteristic(Surface s);  // 2 - 2g - p

// Complexity 3g - 3 + p: the number of curves in a pants decomposition,
// equivalently the top rank of a free abelian twist subgroup for chi(S) < 0.
int xi(Surface s);

// Length of the longest linear chain of essential simple closed curves on
// S_{g,p}: consecutive curves intersect, all other pairs are disjoint, no two
// are isotopic. Zero when the surface carries no essential curve.
int ell_closed_form(Surface s);

// Size bound for chained families (an arc chained to a linear chain of
// curves). Feeds the recursion behind ell_recursive.
int f_closed_form(Surface s);

enum class CutKind {
    NonSeparatingCurve,
    SeparatingCurve,
    NonSeparatingArcGenusReducing,
    NonSeparatingArcGenusPreserving,
    SeparatingArc,
};

std::string to_string(CutKind k);

// Result of cutting along one essential curve or arc: one component for a
// non-separating cut, two for a separating one (stored sorted).
struct CutOutcome {
    CutKind kind;
    std::vector<Surface> components;

    bool operator==(const CutOutcome&) const = default;
};

// All topological types obtainable by cutting S_{g,p} along one essential
// simple closed curve. Empty when no essential curve exists (g=0, p<=3).
// Total Euler characteristic of the pieces equals chi(S).
std::vector<CutOutcome> enumerate_curve_cuts(Surface s);

// All topological types obtainable by cutting along one essential properly
// embedded arc. Empty when p = 0. Total chi of the pieces is chi(S) + 1.
std::vector<CutOutcome> enumerate_arc_cuts(Surface s);

}  // namespace raagmcg
