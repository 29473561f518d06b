#pragma once

#include "raagmcg/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace raagmcg {

// One syllable v^e of a word in a RAAG; vertex indexes the defining graph.
struct Syllable {
    int vertex = 0;
    long long exponent = 0;

    bool operator==(const Syllable&) const = default;
};

using Word = std::vector<Syllable>;

Word inverse(const Word& w);
Word concat(Word a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

// RAAG G(Gamma) under the anti-commutation convention: an edge of the
// defining graph means the generators do NOT commute.
class Raag {
public:
    explicit Raag(Graph defining_graph);

    const Graph& graph() const { return graph_; }

    // Generators u, v commute iff u == v or {u,v} is a non-edge.
    bool commute(int u, int v) const;

    // Canonical shortest form: cancel and merge syllables across commuting
    // blocks until reduced, then order the reduced syllables by the
    // lexicographically least linearization of their dependence order.
    // Two words represent the same element iff their normal forms agree.
    Word normal_form(const Word& w) const;

    bool is_trivial(const Word& w) const { return normal_form(w).empty(); }
    bool equal(const Word& a, const Word& b) const;

    // Vertices occurring in the normal form, sorted. Canonical.
    std::vector<int> support(const Word& w) const;

    // The center of a RAAG is generated by the isolated vertices of the
    // defining graph, so: centerless iff no isolated vertex. The empty graph
    // gives the trivial group, which is centerless under this convention.
    bool is_centerless() const;

    // Word syntax: whitespace-separated "v" or "v^k" tokens with k != 0.
    // The empty string names the identity.
    Word parse_word(const std::string& text) const;
    std::string format_word(const Word& w) const;

private:
    Word reduce(const Word& w) const;  // cancel/merge to a geodesic syllable word

    Graph graph_;
};

// v_i -> v_i^{k_i}, extended syllable-wise. Always a homomorphism (all
// defining relators are commutators, which powers preserve); construction
// re-verifies that on every non-edge and aborts on failure.
struct PowerEndomorphism {
    std::vector<long long> exponents;  // per vertex, all non-zero
    Word apply(const Word& w) const;
};

PowerEndomorphism power_endomorphism(const Raag& r, const std::vector<long long>& exponents);

// Multi-valued vertex correspondence phi: source ~> target, giving each
// source vertex a non-empty set of target vertices. Axioms:
//   (0) every image set is non-empty;
//   (1) a source edge {x,y} forces every pair in phi(x) x phi(y) to be
//       adjacent in the target; sharing a vertex violates this, since no
//       vertex is adjacent to itself.
struct MultiValuedHom {
    Graph source;
    Graph target;
    std::vector<uint64_t> images;  // per source vertex, mask over target vertices
};

// Empty result = valid. Each string is one axiom violation.
std::vector<std::string> validate_mvh(const MultiValuedHom& phi);

// Factorization data for a homomorphism into a twist subgroup: each target
// RAAG generator u is assigned a product of powers of mutually commuting
// twists about curves drawn from the curve graph `gamma` (vertices = curves,
// edges = essential intersection).
struct TwistAssignment {
    Graph lambda;  // defining graph of the RAAG being mapped in
    Graph gamma;   // curve intersection graph
    std::vector<std::vector<Syllable>> twists;  // per lambda vertex: (gamma vertex, exponent)
};

struct TwistAssignmentResult {
    MultiValuedHom mvh;              // source = induced subgraph of gamma on occurring curves
    std::vector<int> occurring;      // gamma indices backing mvh.source, sorted
    std::vector<std::string> violations;  // non-empty = obstruction certificate
    // Target edges {u,v} with no source edge joining phi^{-1}(u) to
    // phi^{-1}(v). Not a violation; path lifting needs these covered.
    std::vector<std::pair<int, int>> uncovered_target_edges;

    bool valid() const { return violations.empty(); }
};

// Reads the correspondence x -> {u : x occurs in u's twist list} off a twist
// assignment and validates it. Malformed input (an empty list, a zero
// exponent, intersecting curves inside one list) throws; axiom violations of
// the built correspondence are returned as a certificate.
TwistAssignmentResult mvh_from_twist_assignment(const TwistAssignment& t);

// Generator-image map of the homomorphism G(target) -> G(source) induced by
// a valid correspondence: u -> prod_{x : u in phi(x)} x^{e(u,x)}, factors in
// source vertex order.
struct InducedHom {
    Graph source;             // words below live in G(source)
    Graph target;
    std::vector<Word> images; // per target vertex
};

// exps keys are (target vertex, source vertex); missing entries default to 1,
// zero exponents are rejected. Well-definedness is re-checked by normal
// forms: for every target non-edge {u,v} the commutator of the images must
// be trivial. A valid correspondence always passes; failure aborts.
InducedHom induced_raag_hom(const MultiValuedHom& phi,
                            const std::map<std::pair<int, int>, long long>& exps = {});

// f maps each gamma vertex to a lambda vertex. Covering: surjective, maps
// edges to edges, and restricts to a bijection from each neighborhood N(x)
// onto N(f(x)).
bool is_covering_map(const Graph& gamma, const Graph& lambda, const std::vector<int>& f);

struct CoveringEmbedding {
    std::vector<Word> psi;          // per lambda vertex: product of its fiber, in G(gamma)
    std::vector<long long> degree;  // fiber sizes; u maps to u^degree under projection
};

// Data of the embedding G(lambda) -> G(gamma) attached to a covering map:
// psi(u) = product of the fiber f^{-1}(u). Verifies, by normal forms in
// G(lambda), that projecting psi(u) back along f gives u^{|fiber|}.
CoveringEmbedding covering_embedding_data(const Graph& gamma, const Graph& lambda,
                                          const std::vector<int>& f);

// Lift an induced path through a valid correspondence: given iota, an
// induced path w_1..w_n in the target, find distinct source vertices forming
// an induced path x_1..x_n with iota(w_k) in phi(x_k). Backtracking in
// vertex order; returns the first lift, or nullopt (absence is a legitimate
// outcome, not an error).
std::optional<std::vector<int>> lift_path(const MultiValuedHom& phi, const std::vector<int>& iota);

}  // namespace raagmcg
