#pragma once

#include "raagmcg/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace raagmcg {

// Yes/No answer exact classifications; Obstructed/NoObstructionFound carry
// one-sided semantics: Obstructed certifies non-embeddability, while
// NoObstructionFound promises nothing. OutOfScope marks inputs the known
// classifications do not cover.
enum class Answer { Yes, No, Obstructed, NoObstructionFound, OutOfScope };

std::string to_string(Answer a);

// One evaluated inequality (or equality) backing a verdict.
struct Reason {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool ok = true;
};

struct Verdict {
    Answer answer = Answer::OutOfScope;
    std::vector<Reason> reasons;
    std::string scope_note;
    std::optional<long long> max;  // exact bound carried by the max_* queries
};

std::string verdict_to_json(const Verdict& v);

struct BraidTarget {
    int strands = 1;
    bool pure = false;  // the bounds below coincide for B_n and its pure subgroup

    BraidTarget(int n, bool is_pure = false);
};

// Largest m with a linear chain RAAG G(P_m) in Mod(S_{g,p}). Same table as
// ell_closed_form; kept as an independent transcription so the two can be
// checked against each other.
int max_path_in_mcg(Surface s);

// Largest m with a closed chain RAAG G(C_m) in Mod(S): exact for the planar
// punctured family (m = p on S_{0,p>=5}) and the closed family (m = 2g+2 on
// S_{g>=2,0}); OutOfScope elsewhere, with the necessary bound m <= ell + 1
// reported in `max`-free form via scope_note and reasons.
Verdict max_cycle_in_mcg(Surface s);

int max_path_in_braid(BraidTarget t);
int max_cycle_in_braid(BraidTarget t);

Verdict decide_path_in_mcg(int m, Surface s);    // m >= 0
Verdict decide_cycle_in_mcg(int m, Surface s);   // m >= 3
Verdict decide_path_in_braid(int m, BraidTarget t);
Verdict decide_cycle_in_braid(int m, BraidTarget t);

// Necessary conditions for a virtual embedding Mod(source) -> Mod(target),
// both surfaces of negative Euler characteristic: complexity xi and chain
// length ell cannot decrease. For genus >= 2 on both sides the equivalent
// linear forms 3g+p and 2g+p are reported as well.
Verdict virtual_mcg_obstruction(Surface source, Surface target);

// Exact criterion for Mod(S_{0,p}) virtually embedding into Mod(S_{g,0}),
// g >= 2: possible iff p <= 2g + 2.
Verdict sphere_into_closed_virtual(int punctures, int genus);

// Necessary conditions for a virtual embedding of the braid group B_n into
// Mod(S_{g',0}^b), b in {0,1,2} boundary circles. Writing n = 2g+1 or 2g+2,
// the classified cases are (odd n, b=0), (odd n, b=1), (even n, b=0) and
// (even n, b=2); the genus bound is g <= g' except for (even n, b=0) where
// it sharpens to g+1 <= g'. Also checks the chain bound through capping and,
// for closed targets, the abelian rank bound n-1 <= max(0, xi).
Verdict braid_virtual_obstruction(int strands, Surface target, int boundary);

// Mutual virtual embeddability of Mod(a) and Mod(b), both genera >= 2,
// forces a = b: both directions unobstructed happens only on the diagonal.
Verdict rigidity_check(Surface a, Surface b);

}  // namespace raagmcg
