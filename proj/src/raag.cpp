#include "raagmcg/raag.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace raagmcg {

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& s : out) s.exponent = -s.exponent;
    return out;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word commutator(const Word& a, const Word& b) {
    return concat(concat(concat(a, b), inverse(a)), inverse(b));
}

Raag::Raag(Graph defining_graph) : graph_(std::move(defining_graph)) {}

bool Raag::commute(int u, int v) const {
    if (u == v) return true;
    return !graph_.adjacent(u, v);
}

Word Raag::reduce(const Word& w) const {
    Word s;
    for (const Syllable& syl : w) {
        if (syl.vertex < 0 || syl.vertex >= graph_.size())
            throw std::out_of_range("word: generator index out of range");
        if (syl.exponent != 0) s.push_back(syl);
    }
    // Pull together syllables of the same generator whenever everything
    // between commutes with it; repeat until nothing cancels or merges.
    bool changed = true;
    while (changed) {
        changed = false;
        std::erase_if(s, [](const Syllable& x) { return x.exponent == 0; });
        for (size_t i = 0; i < s.size() && !changed; ++i) {
            for (size_t j = i + 1; j < s.size(); ++j) {
                if (s[j].vertex == s[i].vertex) {
                    s[i].exponent += s[j].exponent;
                    s.erase(s.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
                if (!commute(s[i].vertex, s[j].vertex)) break;
            }
        }
    }
    return s;
}

Word Raag::normal_form(const Word& w) const {
    const Word s = reduce(w);
    const int m = static_cast<int>(s.size());

    // Dependence order of the reduced syllables: position i must stay before
    // j > i unless the generators commute. The element determines this
    // labeled poset; its least linearization is the canonical form.
    std::vector<int> pred(m, 0);
    std::vector<std::vector<int>> succ(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!commute(s[i].vertex, s[j].vertex) || s[i].vertex == s[j].vertex) {
                succ[i].push_back(j);
                ++pred[j];
            }

    std::set<std::pair<int, int>> available;  // (vertex, position)
    for (int i = 0; i < m; ++i)
        if (pred[i] == 0) available.insert({s[i].vertex, i});

    Word out;
    out.reserve(m);
    while (!available.empty()) {
        const auto [v, i] = *available.begin();
        available.erase(available.begin());
        out.push_back(s[i]);
        for (int j : succ[i])
            if (--pred[j] == 0) available.insert({s[j].vertex, j});
    }
    return out;
}

bool Raag::equal(const Word& a, const Word& b) const {
    return normal_form(a) == normal_form(b);
}

std::vector<int> Raag::support(const Word& w) const {
    std::set<int> vs;
    for (const Syllable& s : normal_form(w)) vs.insert(s.vertex);
    return {vs.begin(), vs.end()};
}

bool Raag::is_centerless() const {
    for (int v = 0; v < graph_.size(); ++v)
        if (graph_.degree(v) == 0) return false;  // isolated vertex generates central Z
    return true;
}

Word Raag::parse_word(const std::string& text) const {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::string name = token;
        long long exp = 1;
        if (const auto caret = token.find('^'); caret != std::string::npos) {
            name = token.substr(0, caret);
            const std::string etext = token.substr(caret + 1);
            try {
                size_t used = 0;
                exp = std::stoll(etext, &used);
                if (used != etext.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument("word: bad exponent in token '" + token + "'");
            }
            if (exp == 0) throw std::invalid_argument("word: zero exponent in token '" + token + "'");
        }
        const auto v = graph_.index_of(name);
        if (!v) throw std::invalid_argument("word: unknown generator '" + name + "'");
        w.push_back({*v, exp});
    }
    return w;
}

std::string Raag::format_word(const Word& w) const {
    std::string out;
    for (const Syllable& s : w) {
        if (!out.empty()) out += ' ';
        out += graph_.label(s.vertex);
        if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
    }
    return out;
}

Word PowerEndomorphism::apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (const Syllable& s : w) {
        if (s.vertex < 0 || s.vertex >= static_cast<int>(exponents.size()))
            throw std::out_of_range("power endomorphism: generator index out of range");
        out.push_back({s.vertex, s.exponent * exponents[s.vertex]});
    }
    return out;
}

PowerEndomorphism power_endomorphism(const Raag& r, const std::vector<long long>& exponents) {
    if (static_cast<int>(exponents.size()) != r.graph().size())
        throw std::invalid_argument("power endomorphism: need one exponent per generator");
    for (long long e : exponents)
        if (e == 0) throw std::invalid_argument("power endomorphism: exponents must be non-zero");
    PowerEndomorphism pe{exponents};
    // Relators are commutators of non-edges; their images must stay trivial.
    const Graph& g = r.graph();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.adjacent(u, v)) continue;
            const Word image = commutator(pe.apply({{u, 1}}), pe.apply({{v, 1}}));
            if (!r.is_trivial(image))
                throw std::logic_error("power endomorphism: relation image not trivial");
        }
    return pe;
}

std::vector<std::string> validate_mvh(const MultiValuedHom& phi) {
    std::vector<std::string> out;
    const int ns = phi.source.size(), nt = phi.target.size();
    if (static_cast<int>(phi.images.size()) != ns)
        throw std::invalid_argument("mvh: assignment must give an image set to every source vertex");
    const uint64_t target_mask = (nt >= 64) ? ~uint64_t{0} : ((uint64_t{1} << nt) - 1);
    for (int x = 0; x < ns; ++x) {
        if (phi.images[x] & ~target_mask)
            out.push_back("image of '" + phi.source.label(x) + "' mentions an unknown target vertex");
        if ((phi.images[x] & target_mask) == 0)
            out.push_back("axiom 0: image of '" + phi.source.label(x) + "' is empty");
    }
    if (!out.empty()) return out;

    for (auto [x, y] : phi.source.edges()) {
        for (int u = 0; u < nt; ++u) {
            if (!((phi.images[x] >> u) & 1)) continue;
            for (int v = 0; v < nt; ++v) {
                if (!((phi.images[y] >> v) & 1)) continue;
                if (u == v)
                    out.push_back("axiom 1: edge {" + phi.source.label(x) + "," +
                                  phi.source.label(y) + "} maps a pair onto '" +
                                  phi.target.label(u) + "' (no vertex is adjacent to itself)");
                else if (!phi.target.adjacent(u, v))
                    out.push_back("axiom 1: edge {" + phi.source.label(x) + "," +
                                  phi.source.label(y) + "} has non-adjacent images {" +
                                  phi.target.label(u) + "," + phi.target.label(v) + "}");
            }
        }
    }
    return out;
}

TwistAssignmentResult mvh_from_twist_assignment(const TwistAssignment& t) {
    const int nl = t.lambda.size();
    if (static_cast<int>(t.twists.size()) != nl)
        throw std::invalid_argument("twist assignment: need one twist list per target vertex");

    std::set<int> occurring;
    for (int u = 0; u < nl; ++u) {
        const auto& list = t.twists[u];
        if (list.empty())
            throw std::invalid_argument("twist assignment: empty list for '" + t.lambda.label(u) + "'");
        for (const Syllable& s : list) {
            if (s.vertex < 0 || s.vertex >= t.gamma.size())
                throw std::invalid_argument("twist assignment: unknown curve index");
            if (s.exponent == 0)
                throw std::invalid_argument("twist assignment: zero twist exponent for '" +
                                            t.lambda.label(u) + "'");
            occurring.insert(s.vertex);
        }
        // Twists in one product must commute, i.e. the curves must not intersect.
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (list[i].vertex != list[j].vertex &&
                    t.gamma.adjacent(list[i].vertex, list[j].vertex))
                    throw std::invalid_argument(
                        "twist assignment: curves '" + t.gamma.label(list[i].vertex) + "' and '" +
                        t.gamma.label(list[j].vertex) + "' intersect inside the product for '" +
                        t.lambda.label(u) + "'");
    }

    TwistAssignmentResult result;
    result.occurring.assign(occurring.begin(), occurring.end());
    result.mvh.source = t.gamma.induced_subgraph(result.occurring);
    result.mvh.target = t.lambda;
    result.mvh.images.assign(result.occurring.size(), 0);
    for (size_t s = 0; s < result.occurring.size(); ++s)
        for (int u = 0; u < nl; ++u)
            for (const Syllable& syl : t.twists[u])
                if (syl.vertex == result.occurring[s]) result.mvh.images[s] |= (uint64_t{1} << u);

    result.violations = validate_mvh(result.mvh);

    for (auto [u, v] : t.lambda.edges()) {
        bool covered = false;
        for (auto [x, y] : result.mvh.source.edges()) {
            const bool fwd = ((result.mvh.images[x] >> u) & 1) && ((result.mvh.images[y] >> v) & 1);
            const bool bwd = ((result.mvh.images[x] >> v) & 1) && ((result.mvh.images[y] >> u) & 1);
            if (fwd || bwd) {
                covered = true;
                break;
            }
        }
        if (!covered) result.uncovered_target_edges.emplace_back(u, v);
    }
    return result;
}

InducedHom induced_raag_hom(const MultiValuedHom& phi,
                            const std::map<std::pair<int, int>, long long>& exps) {
    const auto violations = validate_mvh(phi);
    if (!violations.empty())
        throw std::invalid_argument("induced hom: invalid correspondence: " + violations.front());
    for (const auto& [key, e] : exps) {
        const auto [u, x] = key;
        if (u < 0 || u >= phi.target.size() || x < 0 || x >= phi.source.size())
            throw std::invalid_argument("induced hom: exponent key out of range");
        if (e == 0) throw std::invalid_argument("induced hom: zero exponent");
    }

    InducedHom h{phi.source, phi.target, {}};
    for (int u = 0; u < phi.target.size(); ++u) {
        Word image;
        for (int x = 0; x < phi.source.size(); ++x) {
            if (!((phi.images[x] >> u) & 1)) continue;
            const auto it = exps.find({u, x});
            image.push_back({x, it == exps.end() ? 1 : it->second});
        }
        h.images.push_back(std::move(image));
    }

    // Well-definedness: commuting target generators must have commuting
    // images. Axiom 1 guarantees this; verify anyway and abort on failure.
    const Raag source(phi.source);
    for (int u = 0; u < phi.target.size(); ++u)
        for (int v = u + 1; v < phi.target.size(); ++v) {
            if (phi.target.adjacent(u, v)) continue;
            if (!source.is_trivial(commutator(h.images[u], h.images[v])))
                throw std::logic_error("induced hom: relation [" + phi.target.label(u) + "," +
                                       phi.target.label(v) + "] has non-trivial image");
        }
    return h;
}

bool is_covering_map(const Graph& gamma, const Graph& lambda, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != gamma.size())
        throw std::invalid_argument("covering: need one image per vertex");
    for (int v : f)
        if (v < 0 || v >= lambda.size())
            throw std::invalid_argument("covering: image vertex out of range");

    uint64_t hit = 0;
    for (int v : f) hit |= (uint64_t{1} << v);
    const uint64_t all = (lambda.size() >= 64) ? ~uint64_t{0} : ((uint64_t{1} << lambda.size()) - 1);
    if (hit != all) return false;  // not surjective

    for (auto [x, y] : gamma.edges())
        if (f[x] == f[y] || !lambda.adjacent(f[x], f[y])) return false;  // edge collapsed

    for (int x = 0; x < gamma.size(); ++x) {
        uint64_t image = 0;
        for (int y = 0; y < gamma.size(); ++y) {
            if (!gamma.adjacent(x, y)) continue;
            if ((image >> f[y]) & 1) return false;  // two neighbors over one vertex
            image |= (uint64_t{1} << f[y]);
        }
        if (image != lambda.neighbors_mask(f[x])) return false;  // neighborhood not onto
    }
    return true;
}

CoveringEmbedding covering_embedding_data(const Graph& gamma, const Graph& lambda,
                                          const std::vector<int>& f) {
    if (!is_covering_map(gamma, lambda, f))
        throw std::invalid_argument("covering embedding: not a covering map");

    CoveringEmbedding data;
    data.psi.resize(lambda.size());
    data.degree.assign(lambda.size(), 0);
    for (int x = 0; x < gamma.size(); ++x) {
        data.psi[f[x]].push_back({x, 1});
        ++data.degree[f[x]];
    }

    // Projecting psi(u) back along f must give u^{fiber size} in G(lambda).
    const Raag lam(lambda);
    for (int u = 0; u < lambda.size(); ++u) {
        Word projected;
        for (const Syllable& s : data.psi[u]) projected.push_back({f[s.vertex], s.exponent});
        if (!lam.equal(projected, {{u, data.degree[u]}}))
            throw std::logic_error("covering embedding: projection identity failed");
    }
    return data;
}

namespace {

bool extend_lift(const MultiValuedHom& phi, const std::vector<int>& iota, std::vector<int>& x,
                 uint64_t used) {
    const size_t k = x.size();
    if (k == iota.size()) return true;
    for (int cand = 0; cand < phi.source.size(); ++cand) {
        if ((used >> cand) & 1) continue;
        if (!((phi.images[cand] >> iota[k]) & 1)) continue;
        bool fits = true;
        for (size_t j = 0; j < k; ++j) {
            const bool want = (j + 1 == k);  // induced path: consecutive only
            if (phi.source.adjacent(x[j], cand) != want) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        x.push_back(cand);
        if (extend_lift(phi, iota, x, used | (uint64_t{1} << cand))) return true;
        x.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> lift_path(const MultiValuedHom& phi, const std::vector<int>& iota) {
    const auto violations = validate_mvh(phi);
    if (!violations.empty())
        throw std::invalid_argument("lift: invalid correspondence: " + violations.front());
    if (iota.empty()) throw std::invalid_argument("lift: empty path");
    for (size_t i = 0; i < iota.size(); ++i) {
        if (iota[i] < 0 || iota[i] >= phi.target.size())
            throw std::invalid_argument("lift: path vertex out of range");
        for (size_t j = 0; j < i; ++j) {
            const bool want = (j + 1 == i);
            if (iota[i] == static_cast<int>(iota[j]) ||
                phi.target.adjacent(iota[j], iota[i]) != want)
                throw std::invalid_argument("lift: iota is not an induced path");
        }
    }

    std::vector<int> x;
    if (extend_lift(phi, iota, x, 0)) return x;
    return std::nullopt;
}

}  // namespace raagmcg
