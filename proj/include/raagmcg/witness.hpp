#pragma once

#include "raagmcg/surface.hpp"

#include <string>
#include <vector>

namespace raagmcg {

// Symbolic curve descriptors. Adjacency between two descriptors means the
// curves must intersect; non-adjacency means they can be made disjoint.
//
//   Interval [a,b]: on S_{0,p} with the punctures in a row, the circle
//     enclosing punctures a..b. Two intervals intersect iff they link
//     (overlap with neither containing the other).
//   CircularInterval: on S_{0,p} with the punctures on a circle, the arc of
//     `count` consecutive punctures starting at `first` (1-based, wrapping
//     mod `modulus`). Two arcs intersect iff they link as arcs.
//   ChainCurve(k): k-th curve of the standard chain on a positive-genus
//     surface; consecutive indices intersect once, others are disjoint.
//   ExtensionCurve(j): j-th curve of the puncture tail appended to a chain;
//     consecutive indices intersect, and the first one intersects exactly
//     the last ChainCurve.
enum class CurveKind { Interval, CircularInterval, ChainCurve, ExtensionCurve };

struct CurveDescriptor {
    CurveKind kind = CurveKind::Interval;
    int a = 0;        // Interval: first puncture; Circular: first puncture; Chain/Extension: index
    int b = 0;        // Interval: last puncture; Circular: count
    int modulus = 0;  // Circular only: number of punctures on the circle

    static CurveDescriptor interval(int first, int last);
    static CurveDescriptor circular(int first, int count, int modulus);
    static CurveDescriptor chain(int index);
    static CurveDescriptor extension(int index);

    std::string label() const;

    bool operator==(const CurveDescriptor&) const = default;
};

// Interval calculus: computes intersection for Interval/Interval and
// CircularInterval/CircularInterval pairs (same modulus). Other inputs are
// rejected; the remaining descriptor kinds carry declared adjacency instead.
bool interval_adjacency(const CurveDescriptor& c1, const CurveDescriptor& c2);

// Declared adjacency for ChainCurve/ExtensionCurve pairs and for cross-kind
// pairs. `cyclic` closes the chain (used by cycle witnesses), `chain_count`
// is the number of ChainCurve descriptors present.
bool declared_adjacency(const CurveDescriptor& c1, const CurveDescriptor& c2, bool cyclic,
                        int chain_count);

enum class ChainPattern { Path, Cycle };

// A chain witness: curves whose pairwise intersection pattern realizes a
// path (linear chain) or cycle (closed chain) of the stated length on the
// stated surface.
struct ChainWitness {
    Surface surface;
    ChainPattern pattern = ChainPattern::Path;
    std::vector<CurveDescriptor> curves;
    std::vector<std::vector<bool>> adjacency;

    int length() const { return static_cast<int>(curves.size()); }
};

// Maximal linear chain on S_{g,p}; its length always equals
// ell_closed_form(s). Throws when no essential curve exists (ell = 0).
ChainWitness build_path_witness(Surface s);

// Maximal closed chain; defined for S_{0,p>=5} (length p) and for closed
// S_{g>=2} (length 2g+2). Throws for every other surface.
ChainWitness build_cycle_witness(Surface s);

struct WitnessReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Re-derives every adjacency from the descriptors, checks the matrix is
// exactly the expected path/cycle pattern, the length matches the closed
// form, the descriptors are pairwise distinct and every curve is essential.
WitnessReport verify_witness(const ChainWitness& w);

std::string witness_to_json(const ChainWitness& w);
std::string witness_to_dot(const ChainWitness& w);

}  // namespace raagmcg
