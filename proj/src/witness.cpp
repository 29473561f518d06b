#include "raagmcg/witness.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace raagmcg {

CurveDescriptor CurveDescriptor::interval(int first, int last) {
    if (first < 1 || last < first)
        throw std::invalid_argument("interval: need 1 <= first <= last");
    return {CurveKind::Interval, first, last, 0};
}

CurveDescriptor CurveDescriptor::circular(int first, int count, int modulus) {
    if (modulus < 3 || first < 1 || first > modulus || count < 1 || count > modulus)
        throw std::invalid_argument("circular interval: bad arc");
    return {CurveKind::CircularInterval, first, count, modulus};
}

CurveDescriptor CurveDescriptor::chain(int index) {
    if (index < 1) throw std::invalid_argument("chain curve: index must be >= 1");
    return {CurveKind::ChainCurve, index, 0, 0};
}

CurveDescriptor CurveDescriptor::extension(int index) {
    if (index < 1) throw std::invalid_argument("extension curve: index must be >= 1");
    return {CurveKind::ExtensionCurve, index, 0, 0};
}

std::string CurveDescriptor::label() const {
    switch (kind) {
        case CurveKind::Interval:
            return "I[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case CurveKind::CircularInterval: {
            const int last = ((a - 1 + b - 1) % modulus) + 1;
            return "CI[" + std::to_string(a) + ".." + std::to_string(last) + "]";
        }
        case CurveKind::ChainCurve:
            return "CC(" + std::to_string(a) + ")";
        case CurveKind::ExtensionCurve:
            return "EC(" + std::to_string(a) + ")";
    }
    return "?";
}

namespace {

uint64_t arc_mask(const CurveDescriptor& c) {
    uint64_t m = 0;
    for (int k = 0; k < c.b; ++k) m |= (uint64_t{1} << ((c.a - 1 + k) % c.modulus));
    return m;
}

}  // namespace

bool interval_adjacency(const CurveDescriptor& c1, const CurveDescriptor& c2) {
    if (c1.kind == CurveKind::Interval && c2.kind == CurveKind::Interval) {
        // Linked iff the puncture ranges overlap and neither contains the other.
        const bool disjoint = c1.b < c2.a || c2.b < c1.a;
        const bool nested = (c1.a <= c2.a && c2.b <= c1.b) || (c2.a <= c1.a && c1.b <= c2.b);
        return !disjoint && !nested;
    }
    if (c1.kind == CurveKind::CircularInterval && c2.kind == CurveKind::CircularInterval) {
        if (c1.modulus != c2.modulus)
            throw std::invalid_argument("interval adjacency: circular arcs on different circles");
        if (c1.modulus > 64)
            throw std::invalid_argument("interval adjacency: circle too large");
        const uint64_t m1 = arc_mask(c1), m2 = arc_mask(c2);
        const bool disjoint = (m1 & m2) == 0;
        const bool nested = (m1 & ~m2) == 0 || (m2 & ~m1) == 0;
        return !disjoint && !nested;
    }
    throw std::invalid_argument("interval adjacency: defined for interval kinds only");
}

bool declared_adjacency(const CurveDescriptor& c1, const CurveDescriptor& c2, bool cyclic,
                        int chain_count) {
    const CurveKind k1 = c1.kind, k2 = c2.kind;
    if (k1 == CurveKind::ChainCurve && k2 == CurveKind::ChainCurve) {
        if (std::abs(c1.a - c2.a) == 1) return true;
        if (cyclic && chain_count > 2) {
            const int lo = std::min(c1.a, c2.a), hi = std::max(c1.a, c2.a);
            if (lo == 1 && hi == chain_count) return true;
        }
        return false;
    }
    if (k1 == CurveKind::ExtensionCurve && k2 == CurveKind::ExtensionCurve)
        return std::abs(c1.a - c2.a) == 1;
    // The extension tail hangs off the end of the chain: its first curve
    // meets exactly the last chain curve.
    if (k1 == CurveKind::ChainCurve && k2 == CurveKind::ExtensionCurve)
        return c2.a == 1 && c1.a == chain_count;
    if (k1 == CurveKind::ExtensionCurve && k2 == CurveKind::ChainCurve)
        return c1.a == 1 && c2.a == chain_count;
    return false;  // remaining cross-kind pairs are disjoint by construction
}

namespace {

bool is_interval_kind(CurveKind k) {
    return k == CurveKind::Interval || k == CurveKind::CircularInterval;
}

// Adjacency of two descriptors in the context of a witness: interval kinds go
// through the interval calculus, everything else through the declared rules.
bool semantic_adjacency(const ChainWitness& w, int i, int j) {
    const CurveDescriptor& c1 = w.curves[i];
    const CurveDescriptor& c2 = w.curves[j];
    if (is_interval_kind(c1.kind) && is_interval_kind(c2.kind) && c1.kind == c2.kind)
        return interval_adjacency(c1, c2);
    int chain_count = 0;
    for (const auto& c : w.curves)
        if (c.kind == CurveKind::ChainCurve) ++chain_count;
    return declared_adjacency(c1, c2, w.pattern == ChainPattern::Cycle, chain_count);
}

ChainWitness finish(ChainWitness w) {
    const int n = w.length();
    w.adjacency.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            w.adjacency[i][j] = w.adjacency[j][i] = semantic_adjacency(w, i, j);
    return w;
}

}  // namespace

ChainWitness build_path_witness(Surface s) {
    const int g = s.genus, p = s.punctures;
    const int ell = ell_closed_form(s);
    if (ell < 1)
        throw std::invalid_argument("path witness: " + to_string(s) + " carries no essential curve");

    ChainWitness w;
    w.surface = s;
    w.pattern = ChainPattern::Path;

    if (g == 0 && p == 4) {
        // Two linked intervals; the length-2 chain is maximal here.
        w.curves.push_back(CurveDescriptor::interval(1, 2));
        w.curves.push_back(CurveDescriptor::interval(2, 3));
    } else if (g == 0) {
        for (int i = 1; i < p; ++i) w.curves.push_back(CurveDescriptor::interval(i, i + 1));
    } else if (g == 1 && p <= 1) {
        w.curves.push_back(CurveDescriptor::chain(1));
        w.curves.push_back(CurveDescriptor::chain(2));
    } else {
        // Chain through the handles, then a tail through the punctures.
        const int chain = (g == 1) ? 3 : 2 * g + 1;
        const int tail = (g == 1) ? p - 1 : p;
        for (int i = 1; i <= chain; ++i) w.curves.push_back(CurveDescriptor::chain(i));
        for (int j = 1; j <= tail; ++j) w.curves.push_back(CurveDescriptor::extension(j));
    }

    if (w.length() != ell)
        throw std::logic_error("path witness: generated length disagrees with the closed form");
    return finish(std::move(w));
}

ChainWitness build_cycle_witness(Surface s) {
    const int g = s.genus, p = s.punctures;
    ChainWitness w;
    w.surface = s;
    w.pattern = ChainPattern::Cycle;

    if (g == 0 && p >= 5) {
        for (int i = 1; i <= p; ++i) w.curves.push_back(CurveDescriptor::circular(i, 2, p));
    } else if (g >= 2 && p == 0) {
        for (int i = 1; i <= 2 * g + 2; ++i) w.curves.push_back(CurveDescriptor::chain(i));
    } else {
        throw std::invalid_argument("cycle witness: no closed chain family on " + to_string(s));
    }
    return finish(std::move(w));
}

WitnessReport verify_witness(const ChainWitness& w) {
    WitnessReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    const int n = w.length();
    const int g = w.surface.genus, p = w.surface.punctures;

    // Expected length.
    if (w.pattern == ChainPattern::Path) {
        const int ell = ell_closed_form(w.surface);
        if (ell < 1)
            fail("surface carries no chain");
        else if (n != ell)
            fail("length " + std::to_string(n) + " != expected " + std::to_string(ell));
    } else {
        int expected = -1;
        if (g == 0 && p >= 5) expected = p;
        if (g >= 2 && p == 0) expected = 2 * g + 2;
        if (expected < 0)
            fail("surface outside the closed-chain families");
        else if (n != expected)
            fail("length " + std::to_string(n) + " != expected " + std::to_string(expected));
        if (n < 3) fail("a closed chain needs at least 3 curves");
    }

    // Matrix shape.
    if (static_cast<int>(w.adjacency.size()) != n) {
        fail("adjacency matrix size mismatch");
        return report;
    }
    for (const auto& row : w.adjacency)
        if (static_cast<int>(row.size()) != n) {
            fail("adjacency matrix row size mismatch");
            return report;
        }
    for (int i = 0; i < n; ++i) {
        if (w.adjacency[i][i]) fail("adjacency diagonal must be empty");
        for (int j = i + 1; j < n; ++j)
            if (w.adjacency[i][j] != w.adjacency[j][i]) fail("adjacency matrix not symmetric");
    }

    // The matrix must be the exact chain pattern: consecutive curves meet,
    // nothing else does.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool want = (j - i == 1);
            if (w.pattern == ChainPattern::Cycle && i == 0 && j == n - 1) want = true;
            if (w.adjacency[i][j] != want)
                fail("pattern: curves " + std::to_string(i) + "," + std::to_string(j) +
                     (want ? " must intersect" : " must be disjoint"));
        }

    // Each entry must also agree with what the descriptors themselves say.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool derived = semantic_adjacency(w, i, j);
            if (w.adjacency[i][j] != derived)
                fail("descriptors " + w.curves[i].label() + "," + w.curves[j].label() +
                     " contradict the stored adjacency");
        }

    // Distinctness (descriptor level; equal descriptors are isotopic curves).
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w.curves[i] == w.curves[j]) fail("duplicate curve " + w.curves[i].label());

    // Essentiality of the planar descriptors: both sides of the curve must
    // contain at least two punctures.
    for (const CurveDescriptor& c : w.curves) {
        if (c.kind == CurveKind::Interval) {
            const int len = c.b - c.a + 1;
            if (c.a < 1 || c.b > p) fail(c.label() + ": puncture out of range");
            if (len < 2 || len > p - 2) fail(c.label() + ": not essential on " + to_string(w.surface));
        } else if (c.kind == CurveKind::CircularInterval) {
            if (c.modulus != p) fail(c.label() + ": wrong circle size");
            if (c.b < 2 || c.b > p - 2) fail(c.label() + ": not essential on " + to_string(w.surface));
        }
    }
    return report;
}

namespace {

nlohmann::ordered_json descriptor_to_json(const CurveDescriptor& c) {
    nlohmann::ordered_json j;
    switch (c.kind) {
        case CurveKind::Interval:
            j["kind"] = "interval";
            j["first"] = c.a;
            j["last"] = c.b;
            break;
        case CurveKind::CircularInterval:
            j["kind"] = "circular_interval";
            j["first"] = c.a;
            j["count"] = c.b;
            j["modulus"] = c.modulus;
            break;
        case CurveKind::ChainCurve:
            j["kind"] = "chain_curve";
            j["index"] = c.a;
            break;
        case CurveKind::ExtensionCurve:
            j["kind"] = "extension_curve";
            j["index"] = c.a;
            break;
    }
    j["label"] = c.label();
    return j;
}

}  // namespace

std::string witness_to_json(const ChainWitness& w) {
    nlohmann::ordered_json j;
    j["surface"] = {{"g", w.surface.genus}, {"p", w.surface.punctures}};
    j["pattern"] = (w.pattern == ChainPattern::Path) ? "path" : "cycle";
    auto curves = nlohmann::ordered_json::array();
    for (const auto& c : w.curves) curves.push_back(descriptor_to_json(c));
    j["curves"] = std::move(curves);
    auto edges = nlohmann::ordered_json::array();
    for (int i = 0; i < w.length(); ++i)
        for (int j2 = i + 1; j2 < w.length(); ++j2)
            if (w.adjacency[i][j2]) edges.push_back({i, j2});
    j["edges"] = std::move(edges);
    return j.dump(2);
}

std::string witness_to_dot(const ChainWitness& w) {
    std::string out = "graph chain_witness {\n";
    out += "  // " + to_string(w.surface) +
           (w.pattern == ChainPattern::Path ? ", path" : ", cycle") + "\n";
    for (int i = 0; i < w.length(); ++i)
        out += "  c" + std::to_string(i) + " [label=\"" + w.curves[i].label() + "\"];\n";
    for (int i = 0; i < w.length(); ++i)
        for (int j = i + 1; j < w.length(); ++j)
            if (w.adjacency[i][j])
                out += "  c" + std::to_string(i) + " -- c" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace raagmcg
