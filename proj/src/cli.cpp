#include "raagmcg/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "raagmcg/chains.hpp"
#include "raagmcg/decisions.hpp"
#include "raagmcg/graph.hpp"
#include "raagmcg/raag.hpp"
#include "raagmcg/surface.hpp"
#include "raagmcg/witness.hpp"

namespace raagmcg {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

// "g,p" -> Surface; the format is pre-checked by a CLI validator, the
// Surface constructor still rejects negative entries.
Surface parse_surface_pair(const std::string& text) {
    const auto comma = text.find(',');
    return Surface(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

const CLI::Validator SurfacePair(
    [](std::string& input) -> std::string {
        const auto comma = input.find(',');
        if (comma == std::string::npos || !looks_like_int(input.substr(0, comma)) ||
            !looks_like_int(input.substr(comma + 1)))
            return "expected a genus,punctures pair such as 2,0";
        return "";
    },
    "G,P");

int resolve_index(const Graph& g, const std::string& label) {
    const auto idx = g.index_of(label);
    if (!idx) throw std::invalid_argument("unknown vertex label: " + label);
    return *idx;
}

struct MvhDocument {
    Graph source;
    Graph target;
    MultiValuedHom phi;
};

// {source: <graph>, target: <graph>, assignment: {v: [u, ...], ...}};
// every source vertex needs a non-empty list of target vertices.
MvhDocument load_mvh(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("source") || !doc.contains("target") ||
        !doc.contains("assignment") || !doc["assignment"].is_object())
        throw std::invalid_argument(path + ": expected {source, target, assignment}");
    MvhDocument m{graph_from_json(doc["source"].dump()), graph_from_json(doc["target"].dump()),
                  MultiValuedHom{}};
    m.phi.source = m.source;
    m.phi.target = m.target;
    m.phi.images.assign(static_cast<std::size_t>(m.source.size()), 0);
    for (const auto& [key, value] : doc["assignment"].items()) {
        const int v = resolve_index(m.source, key);
        if (!value.is_array())
            throw std::invalid_argument(path + ": assignment values must be arrays of labels");
        for (const auto& item : value) {
            if (!item.is_string())
                throw std::invalid_argument(path + ": assignment values must be arrays of labels");
            m.phi.images[static_cast<std::size_t>(v)] |=
                1ull << resolve_index(m.target, item.get<std::string>());
        }
    }
    return m;
}

void emit_verdict(const Verdict& v, bool as_json, std::ostream& out) {
    if (as_json)
        out << verdict_to_json(v) << "\n";
    else
        out << to_string(v.answer) << "\n";
}

int emit_witness(const ChainWitness& w, bool as_json, bool as_dot, std::ostream& out,
                 std::ostream& err) {
    const WitnessReport report = verify_witness(w);
    if (!report.ok()) {
        for (const std::string& v : report.violations) err << v << "\n";
        return 3;
    }
    if (as_dot) {
        out << witness_to_dot(w);
    } else if (as_json) {
        out << witness_to_json(w) << "\n";
    } else {
        out << "surface=" << to_string(w.surface)
            << " pattern=" << (w.pattern == ChainPattern::Path ? "path" : "cycle")
            << " length=" << w.length() << "\n";
        out << "curves:";
        for (const CurveDescriptor& c : w.curves) out << " " << c.label();
        out << "\n";
        out << "edges:";
        for (std::size_t i = 0; i < w.adjacency.size(); ++i)
            for (std::size_t j = i + 1; j < w.adjacency.size(); ++j)
                if (w.adjacency[i][j]) out << " " << i << "-" << j;
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chain invariants and embeddability decisions for surface mapping class groups",
                 "raagmcg"};
    app.require_subcommand(1);

    int genus = 0, punctures = 0, m = 0, strands = 0, boundary = 0;
    int max_genus = 0, max_punctures = 0;
    bool pure = false, as_json = false, as_dot = false, as_markdown = false;
    std::string method = "both", source_pair, target_pair, graph_file, word_text;
    int rc = 0;

    const auto add_surface = [&](CLI::App* cmd) {
        cmd->add_option("--genus", genus, "genus g")->required();
        cmd->add_option("--punctures", punctures, "puncture count p")->required();
    };
    const auto add_json = [&](CLI::App* cmd) { return cmd->add_flag("--json", as_json, "JSON output"); };

    CLI::App* ell_cmd = app.add_subcommand("ell", "maximal linear chain length on S_{g,p}");
    add_surface(ell_cmd);
    ell_cmd->add_option("--method", method, "closed|recursive|both")
        ->check(CLI::IsMember({"closed", "recursive", "both"}));
    add_json(ell_cmd);
    ell_cmd->callback([&] {
        const Surface s(genus, punctures);
        std::optional<int> closed, recursive;
        if (method != "recursive") closed = ell_closed_form(s);
        if (method != "closed") recursive = ChainCalculator{}.ell_recursive(s);
        if (as_json) {
            nlohmann::ordered_json j{{"genus", s.genus}, {"punctures", s.punctures}};
            if (closed) j["closed"] = *closed;
            if (recursive) j["recursive"] = *recursive;
            out << j.dump(2) << "\n";
        } else {
            if (closed) out << "closed=" << *closed << (recursive ? " " : "\n");
            if (recursive) out << "recursive=" << *recursive << "\n";
        }
    });

    CLI::App* xi_cmd = app.add_subcommand("xi", "curve-complex complexity 3g-3+p");
    add_surface(xi_cmd);
    add_json(xi_cmd);
    xi_cmd->callback([&] {
        const Surface s(genus, punctures);
        if (as_json)
            out << nlohmann::ordered_json{{"genus", s.genus}, {"punctures", s.punctures}, {"xi", xi(s)}}
                       .dump(2)
                << "\n";
        else
            out << "xi=" << xi(s) << "\n";
    });

    CLI::App* table_cmd = app.add_subcommand("table", "grid of maximal chain lengths");
    table_cmd->add_option("--max-genus", max_genus, "largest genus row")->required();
    table_cmd->add_option("--max-punctures", max_punctures, "largest puncture column")->required();
    CLI::Option* table_json = add_json(table_cmd);
    table_cmd->add_flag("--markdown", as_markdown, "markdown table (default)")->excludes(table_json);
    table_cmd->callback([&] {
        if (max_genus < 0 || max_punctures < 0)
            throw std::invalid_argument("grid bounds must be non-negative");
        if (as_json) {
            auto rows = nlohmann::ordered_json::array();
            for (int g = 0; g <= max_genus; ++g) {
                auto row = nlohmann::ordered_json::array();
                for (int p = 0; p <= max_punctures; ++p) row.push_back(ell_closed_form(Surface(g, p)));
                rows.push_back(std::move(row));
            }
            out << nlohmann::ordered_json{{"max_genus", max_genus},
                                  {"max_punctures", max_punctures},
                                  {"ell", std::move(rows)}}
                       .dump(2)
                << "\n";
            return;
        }
        out << "| g\\p |";
        for (int p = 0; p <= max_punctures; ++p) out << " " << p << " |";
        out << "\n|";
        for (int p = 0; p <= max_punctures + 1; ++p) out << " --- |";
        out << "\n";
        for (int g = 0; g <= max_genus; ++g) {
            out << "| " << g << " |";
            for (int p = 0; p <= max_punctures; ++p)
                out << " " << ell_closed_form(Surface(g, p)) << " |";
            out << "\n";
        }
    });

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check computed tables");
    verify_cmd->require_subcommand(1);
    CLI::App* grid_cmd = verify_cmd->add_subcommand("grid", "closed form vs recursion on a grid");
    grid_cmd->add_option("--max-genus", max_genus, "largest genus")->required();
    grid_cmd->add_option("--max-punctures", max_punctures, "largest puncture count")->required();
    add_json(grid_cmd);
    grid_cmd->callback([&] {
        if (max_genus < 0 || max_punctures < 0)
            throw std::invalid_argument("grid bounds must be non-negative");
        const GridReport report = ChainCalculator{}.verify_grid(max_genus, max_punctures);
        if (as_json) {
            auto violations = nlohmann::ordered_json::array();
            for (const GridViolation& v : report.violations)
                violations.push_back({{"surface",
                                       {{"genus", v.surface.genus}, {"punctures", v.surface.punctures}}},
                                      {"check", v.check},
                                      {"lhs", v.lhs},
                                      {"rhs", v.rhs}});
            out << nlohmann::ordered_json{{"cells", report.cells},
                                  {"ok", report.ok()},
                                  {"violations", std::move(violations)}}
                       .dump(2)
                << "\n";
        } else {
            out << "cells=" << report.cells << " violations=" << report.violations.size() << "\n";
            for (const GridViolation& v : report.violations)
                out << to_string(v.surface) << " " << v.check << ": lhs=" << v.lhs
                    << " rhs=" << v.rhs << "\n";
        }
        if (!report.ok()) rc = 3;
    });

    CLI::App* witness_cmd = app.add_subcommand("witness", "explicit curve systems realizing chains");
    witness_cmd->require_subcommand(1);
    CLI::App* wpath_cmd = witness_cmd->add_subcommand("path", "maximal linear chain witness");
    add_surface(wpath_cmd);
    CLI::Option* wpath_json = add_json(wpath_cmd);
    wpath_cmd->add_flag("--dot", as_dot, "Graphviz output")->excludes(wpath_json);
    wpath_cmd->callback(
        [&] { rc = emit_witness(build_path_witness(Surface(genus, punctures)), as_json, as_dot, out, err); });
    CLI::App* wcycle_cmd = witness_cmd->add_subcommand("cycle", "maximal closed chain witness");
    add_surface(wcycle_cmd);
    CLI::Option* wcycle_json = add_json(wcycle_cmd);
    wcycle_cmd->add_flag("--dot", as_dot, "Graphviz output")->excludes(wcycle_json);
    wcycle_cmd->callback(
        [&] { rc = emit_witness(build_cycle_witness(Surface(genus, punctures)), as_json, as_dot, out, err); });

    CLI::App* decide_cmd = app.add_subcommand("decide", "embeddability of chain groups");
    decide_cmd->require_subcommand(1);
    const auto add_m = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "number of chain vertices")->required();
    };
    CLI::App* dpm = decide_cmd->add_subcommand("path-mcg", "linear chain group into Mod(S_{g,p})");
    add_m(dpm);
    add_surface(dpm);
    add_json(dpm);
    dpm->callback([&] { emit_verdict(decide_path_in_mcg(m, Surface(genus, punctures)), as_json, out); });
    CLI::App* dcm = decide_cmd->add_subcommand("cycle-mcg", "closed chain group into Mod(S_{g,p})");
    add_m(dcm);
    add_surface(dcm);
    add_json(dcm);
    dcm->callback([&] { emit_verdict(decide_cycle_in_mcg(m, Surface(genus, punctures)), as_json, out); });
    const auto add_braid = [&](CLI::App* cmd) {
        add_m(cmd);
        cmd->add_option("--strands", strands, "braid strand count")->required();
        cmd->add_flag("--pure", pure, "pure braid group (same tables)");
        add_json(cmd);
    };
    CLI::App* dpb = decide_cmd->add_subcommand("path-braid", "linear chain group into a braid group");
    add_braid(dpb);
    dpb->callback([&] { emit_verdict(decide_path_in_braid(m, BraidTarget(strands, pure)), as_json, out); });
    CLI::App* dcb = decide_cmd->add_subcommand("cycle-braid", "closed chain group into a braid group");
    add_braid(dcb);
    dcb->callback([&] { emit_verdict(decide_cycle_in_braid(m, BraidTarget(strands, pure)), as_json, out); });

    CLI::App* obstruct_cmd = app.add_subcommand("obstruct", "virtual embedding obstructions");
    obstruct_cmd->require_subcommand(1);
    CLI::App* ov = obstruct_cmd->add_subcommand("virtual", "Mod(source) into Mod(target)");
    ov->add_option("--source", source_pair, "source surface g,p")->required()->check(SurfacePair);
    ov->add_option("--target", target_pair, "target surface g,p")->required()->check(SurfacePair);
    add_json(ov);
    ov->callback([&] {
        emit_verdict(
            virtual_mcg_obstruction(parse_surface_pair(source_pair), parse_surface_pair(target_pair)),
            as_json, out);
    });
    CLI::App* ob = obstruct_cmd->add_subcommand("braid", "braid group into Mod(target)");
    ob->add_option("--strands", strands, "braid strand count")->required();
    ob->add_option("--target", target_pair, "closed target surface g,0")->required()->check(SurfacePair);
    ob->add_option("--boundary", boundary, "boundary circles kept on the target")
        ->check(CLI::Range(0, 2));
    add_json(ob);
    ob->callback([&] {
        emit_verdict(braid_virtual_obstruction(strands, parse_surface_pair(target_pair), boundary),
                     as_json, out);
    });
    CLI::App* os = obstruct_cmd->add_subcommand("sphere-closed", "punctured sphere into closed Mod");
    os->add_option("--punctures", punctures, "punctures on the source sphere")->required();
    os->add_option("--genus", genus, "genus of the closed target")->required();
    add_json(os);
    os->callback([&] { emit_verdict(sphere_into_closed_virtual(punctures, genus), as_json, out); });

    CLI::App* rigidity_cmd = app.add_subcommand("rigidity", "mutual virtual embeddings force equality");
    rigidity_cmd->add_option("--source", source_pair, "first surface g,p")->required()->check(SurfacePair);
    rigidity_cmd->add_option("--target", target_pair, "second surface g,p")->required()->check(SurfacePair);
    add_json(rigidity_cmd);
    rigidity_cmd->callback([&] {
        emit_verdict(rigidity_check(parse_surface_pair(source_pair), parse_surface_pair(target_pair)),
                     as_json, out);
    });

    CLI::App* raag_cmd = app.add_subcommand("raag", "right-angled Artin group utilities");
    raag_cmd->require_subcommand(1);
    CLI::App* nf_cmd = raag_cmd->add_subcommand("nf", "normal form of a word");
    nf_cmd->add_option("--graph", graph_file, "defining graph JSON file")->required();
    nf_cmd->add_option("--word", word_text, "word, e.g. \"u v^-1 u\"")->required();
    add_json(nf_cmd);
    nf_cmd->callback([&] {
        const Raag raag(graph_from_json(read_file(graph_file)));
        const Word nf = raag.normal_form(raag.parse_word(word_text));
        if (as_json)
            out << nlohmann::ordered_json{{"input", word_text},
                                  {"normal_form", raag.format_word(nf)},
                                  {"trivial", nf.empty()}}
                       .dump(2)
                << "\n";
        else
            out << raag.format_word(nf) << "\n";
    });
    CLI::App* center_cmd = raag_cmd->add_subcommand("center", "does the group have trivial center");
    center_cmd->add_option("--graph", graph_file, "defining graph JSON file")->required();
    add_json(center_cmd);
    center_cmd->callback([&] {
        const Raag raag(graph_from_json(read_file(graph_file)));
        if (as_json)
            out << nlohmann::ordered_json{{"centerless", raag.is_centerless()}}.dump(2) << "\n";
        else
            out << "centerless=" << (raag.is_centerless() ? "true" : "false") << "\n";
    });
    CLI::App* lift_cmd = raag_cmd->add_subcommand("lift", "lift an induced path through an MVH");
    lift_cmd->add_option("--graph", graph_file, "MVH JSON file {source, target, assignment}")
        ->required();
    lift_cmd->add_option("--word", word_text, "target path as vertex labels, e.g. \"u1 u2 u3\"")
        ->required();
    add_json(lift_cmd);
    lift_cmd->callback([&] {
        const MvhDocument doc = load_mvh(graph_file);
        const std::vector<std::string> axioms = validate_mvh(doc.phi);
        if (!axioms.empty()) {
            for (const std::string& a : axioms) err << a << "\n";
            throw std::invalid_argument("assignment is not a multi-valued homomorphism");
        }
        std::vector<int> iota;
        std::istringstream tokens(word_text);
        std::string tok;
        while (tokens >> tok) iota.push_back(resolve_index(doc.target, tok));
        const auto lift = lift_path(doc.phi, iota);
        if (as_json) {
            nlohmann::ordered_json j{{"found", lift.has_value()}};
            auto labels = nlohmann::ordered_json::array();
            if (lift)
                for (int v : *lift) labels.push_back(doc.source.label(v));
            j["lift"] = std::move(labels);
            out << j.dump(2) << "\n";
        } else if (lift) {
            out << "lift:";
            for (int v : *lift) out << " " << doc.source.label(v);
            out << "\n";
        } else {
            out << "no lift\n";
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace raagmcg
