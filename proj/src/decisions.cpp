#include "raagmcg/decisions.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace raagmcg {

std::string to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        case Answer::Obstructed: return "Obstructed";
        case Answer::NoObstructionFound: return "NoObstructionFound";
        case Answer::OutOfScope: return "OutOfScope";
    }
    return "?";
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["answer"] = to_string(v.answer);
    auto reasons = nlohmann::ordered_json::array();
    for (const Reason& r : v.reasons)
        reasons.push_back({{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok}});
    j["reasons"] = std::move(reasons);
    j["scope_note"] = v.scope_note;
    if (v.max) j["max"] = *v.max;
    return j.dump(2);
}

BraidTarget::BraidTarget(int n, bool is_pure) : strands(n), pure(is_pure) {
    if (n < 1) throw std::invalid_argument("braid group: need at least one strand");
}

int max_path_in_mcg(Surface s) {
    const int g = s.genus, p = s.punctures;
    if (g >= 2) return 2 * g + p + 1;
    if (g == 1) return (p <= 1) ? 2 : p + 2;
    if (p <= 3) return 0;   // finite or free mapping class group
    if (p == 4) return 2;
    return p - 1;
}

Verdict max_cycle_in_mcg(Surface s) {
    const int g = s.genus, p = s.punctures;
    Verdict v;
    if (g == 0 && p >= 5) {
        v.answer = Answer::Yes;
        v.max = p;
    } else if (g >= 2 && p == 0) {
        v.answer = Answer::Yes;
        v.max = 2 * g + 2;
    } else {
        v.answer = Answer::OutOfScope;
        v.scope_note = "no exact closed-chain classification for " + to_string(s) +
                       "; any embedded closed chain has length at most " +
                       std::to_string(ell_closed_form(s) + 1);
    }
    return v;
}

int max_path_in_braid(BraidTarget t) {
    if (t.strands == 1) return 0;  // trivial group
    if (t.strands <= 3) return t.strands - 1;
    return t.strands;
}

int max_cycle_in_braid(BraidTarget t) {
    if (t.strands <= 2) return 0;
    if (t.strands == 3) return 3;
    return t.strands + 1;
}

Verdict decide_path_in_mcg(int m, Surface s) {
    if (m < 0) throw std::invalid_argument("chain length must be non-negative");
    const int max = max_path_in_mcg(s);
    Verdict v;
    v.max = max;
    v.reasons.push_back({"m <= max chain length", m, max, m <= max});
    v.answer = (m <= max) ? Answer::Yes : Answer::No;
    return v;
}

Verdict decide_cycle_in_mcg(int m, Surface s) {
    if (m < 3) throw std::invalid_argument("closed chains need m >= 3");
    Verdict v = max_cycle_in_mcg(s);
    if (v.answer == Answer::OutOfScope) {
        // Still report the necessary condition: a closed chain of length m
        // contains a linear chain of length m - 1.
        const int ell = ell_closed_form(s);
        v.reasons.push_back({"m - 1 <= ell (necessary)", m - 1, ell, m - 1 <= ell});
        return v;
    }
    const long long max = *v.max;
    v.reasons.push_back({"m <= max closed chain length", m, max, m <= max});
    v.answer = (m <= max) ? Answer::Yes : Answer::No;
    return v;
}

Verdict decide_path_in_braid(int m, BraidTarget t) {
    if (m < 0) throw std::invalid_argument("chain length must be non-negative");
    const int max = max_path_in_braid(t);
    Verdict v;
    v.max = max;
    v.reasons.push_back({"m <= max chain length", m, max, m <= max});
    v.answer = (m <= max) ? Answer::Yes : Answer::No;
    return v;
}

Verdict decide_cycle_in_braid(int m, BraidTarget t) {
    if (m < 3) throw std::invalid_argument("closed chains need m >= 3");
    const int max = max_cycle_in_braid(t);
    Verdict v;
    v.max = max;
    v.reasons.push_back({"m <= max closed chain length", m, max, m <= max});
    v.answer = (m <= max) ? Answer::Yes : Answer::No;
    return v;
}

Verdict virtual_mcg_obstruction(Surface source, Surface target) {
    Verdict v;
    if (euler_characteristic(source) >= 0 || euler_characteristic(target) >= 0) {
        v.answer = Answer::OutOfScope;
        v.scope_note = "both surfaces must have negative Euler characteristic (source chi = " +
                       std::to_string(euler_characteristic(source)) + ", target chi = " +
                       std::to_string(euler_characteristic(target)) + ")";
        return v;
    }
    v.reasons.push_back({"xi", xi(source), xi(target), xi(source) <= xi(target)});
    v.reasons.push_back({"ell", ell_closed_form(source), ell_closed_form(target),
                         ell_closed_form(source) <= ell_closed_form(target)});
    if (source.genus >= 2 && target.genus >= 2) {
        const long long a3 = 3LL * source.genus + source.punctures;
        const long long b3 = 3LL * target.genus + target.punctures;
        const long long a2 = 2LL * source.genus + source.punctures;
        const long long b2 = 2LL * target.genus + target.punctures;
        v.reasons.push_back({"3g+p", a3, b3, a3 <= b3});
        v.reasons.push_back({"2g+p", a2, b2, a2 <= b2});
    }
    const bool obstructed =
        std::any_of(v.reasons.begin(), v.reasons.end(), [](const Reason& r) { return !r.ok; });
    v.answer = obstructed ? Answer::Obstructed : Answer::NoObstructionFound;
    return v;
}

Verdict sphere_into_closed_virtual(int punctures, int genus) {
    if (punctures < 0) throw std::invalid_argument("punctures must be non-negative");
    Verdict v;
    if (genus < 2) {
        v.answer = Answer::OutOfScope;
        v.scope_note = "classification requires a closed target of genus >= 2";
        return v;
    }
    const bool fits = punctures <= 2 * genus + 2;
    v.reasons.push_back({"p <= 2g+2", punctures, 2LL * genus + 2, fits});
    v.answer = fits ? Answer::Yes : Answer::No;
    return v;
}

Verdict braid_virtual_obstruction(int strands, Surface target, int boundary) {
    if (strands < 1) throw std::invalid_argument("braid group: need at least one strand");
    if (boundary < 0 || boundary > 2)
        throw std::invalid_argument("boundary circle count must be 0, 1 or 2");
    Verdict v;
    if (target.punctures != 0) {
        v.answer = Answer::OutOfScope;
        v.scope_note = "target must be closed up to the stated boundary circles (punctures = 0)";
        return v;
    }

    const bool odd = (strands % 2) == 1;
    const int g = odd ? (strands - 1) / 2 : (strands - 2) / 2;
    // Classified: odd strands with 0 or 1 boundary circles, even strands
    // with 0 or 2. The other parity/boundary pairings are uncovered.
    if ((odd && boundary == 2) || (!odd && boundary == 1)) {
        v.answer = Answer::OutOfScope;
        v.scope_note = std::string("no classification for ") + (odd ? "odd" : "even") +
                       " strand count with " + std::to_string(boundary) + " boundary circle(s)";
        return v;
    }

    if (!odd && boundary == 0)
        v.reasons.push_back({"g+1 <= g'", g + 1, target.genus, g + 1 <= target.genus});
    else
        v.reasons.push_back({"g <= g'", g, target.genus, g <= target.genus});

    // Capping boundary circles with punctured disks turns Mod(S^b) into
    // Mod(S_{g',b}) up to center, so chains must fit there.
    const Surface capped(target.genus, boundary);
    const long long chain_lhs = max_path_in_braid(BraidTarget(strands));
    const long long chain_rhs = max_path_in_mcg(capped);
    v.reasons.push_back({"chain", chain_lhs, chain_rhs, chain_lhs <= chain_rhs});

    // Free abelian rank: the braid group contains Z^{n-1} and the rank
    // cannot exceed the complexity of a closed target. Capping makes this
    // bound unreliable with boundary present, so it applies to b = 0 only.
    if (boundary == 0) {
        const long long rank_rhs = std::max(0, xi(target));
        v.reasons.push_back({"rank", strands - 1, rank_rhs, strands - 1 <= rank_rhs});
    }

    const bool obstructed =
        std::any_of(v.reasons.begin(), v.reasons.end(), [](const Reason& r) { return !r.ok; });
    v.answer = obstructed ? Answer::Obstructed : Answer::NoObstructionFound;
    return v;
}

Verdict rigidity_check(Surface a, Surface b) {
    Verdict v;
    if (a.genus < 2 || b.genus < 2) {
        v.answer = Answer::OutOfScope;
        v.scope_note = "rigidity statement covers genus >= 2 on both sides";
        return v;
    }
    const Verdict fwd = virtual_mcg_obstruction(a, b);
    const Verdict bwd = virtual_mcg_obstruction(b, a);
    for (const Reason& r : fwd.reasons)
        v.reasons.push_back({to_string(a) + " -> " + to_string(b) + ": " + r.name, r.lhs, r.rhs, r.ok});
    for (const Reason& r : bwd.reasons)
        v.reasons.push_back({to_string(b) + " -> " + to_string(a) + ": " + r.name, r.lhs, r.rhs, r.ok});

    std::string failing;
    if (fwd.answer == Answer::Obstructed) failing = to_string(a) + " -> " + to_string(b);
    if (bwd.answer == Answer::Obstructed) {
        if (!failing.empty()) failing += " and ";
        failing += to_string(b) + " -> " + to_string(a);
    }
    if (!failing.empty()) {
        v.answer = Answer::Obstructed;
        v.scope_note = "obstructed in direction " + failing;
        return v;
    }
    // Both directions unobstructed forces 3g+p and 2g+p to agree, hence the
    // surfaces to agree.
    if (!(a == b))
        throw std::logic_error("rigidity: mutually unobstructed distinct surfaces");
    v.answer = Answer::Yes;
    v.scope_note = "mutual compatibility forces equal surfaces";
    return v;
}

}  // namespace raagmcg
