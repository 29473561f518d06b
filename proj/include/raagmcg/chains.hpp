#pragma once

#include "raagmcg/surface.hpp"

#include <mutex>
#include <map>
#include <string>
#include <vector>

namespace raagmcg {

// One maximizing step of the recursion: `cut` was applied to `surface` and
// `component` realized the maximum among the resulting pieces.
struct ChainStep {
    Surface surface;
    CutOutcome cut;
    Surface component;
};

// Recursive bounds on a surface together with the cut choices attaining them.
// trace[0] (present iff ell came from the recursive branch) is a curve cut
// with ell = 2 + chained(trace[0].component); every later step is an arc cut
// with chained(step[i-1].component) = 1 + chained(step[i].component). The
// trace ends at a component whose chained value is a base value (0 or 2).
struct ChainBounds {
    Surface surface;
    int ell = 0;
    int chained = 0;
    std::vector<ChainStep> trace;
};

struct GridViolation {
    Surface surface;
    std::string check;
    long long lhs = 0;
    long long rhs = 0;
};

struct GridReport {
    int cells = 0;
    std::vector<GridViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Memoized recursions for the chain bounds. Safe for concurrent use; results
// depend only on (genus, punctures).
class ChainCalculator {
public:
    // Longest chained family, computed by cutting along essential arcs:
    // 0 when S carries no essential closed curve or no arc (p = 0, where no
    // chained pair exists); otherwise max(2, 1 + max over arc-cut pieces).
    int chained_recursive(Surface s);

    // Longest linear chain, computed by cutting along essential curves:
    // 0 / 2 on the base surfaces, otherwise 2 + max over curve-cut pieces of
    // the chained bound.
    int ell_recursive(Surface s);

    ChainBounds bounds(Surface s);

    // Recomputes both recursions over 0..max_genus x 0..max_punctures and
    // compares against the closed forms: ell_recursive == ell_closed_form
    // everywhere; chained_recursive <= f_closed_form everywhere, with
    // equality on {g=0,p>=4}, {g=1,p>=1} and {g>=2,p>=1}.
    GridReport verify_grid(int max_genus, int max_punctures);

private:
    int chained_impl(Surface s);
    int ell_impl(Surface s);

    std::mutex mutex_;
    std::map<std::pair<int, int>, int> chained_memo_;
    std::map<std::pair<int, int>, int> ell_memo_;
};

}  // namespace raagmcg
