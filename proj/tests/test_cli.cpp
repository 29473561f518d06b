#include "raagmcg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "doctest.h"

using raagmcg::run_cli;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

const char* kPathGraph =
    R"({"vertices": ["u", "v", "w"], "edges": [["u", "v"], ["v", "w"]]})";

}  // namespace

TEST_CASE("chain length queries") {
    const CliResult both = run({"ell", "--genus", "0", "--punctures", "5", "--method", "both"});
    CHECK(both.code == 0);
    CHECK(both.out == "closed=4 recursive=4\n");
    CHECK(both.err.empty());

    CHECK(run({"ell", "--genus", "2", "--punctures", "0"}).out == "closed=5 recursive=5\n");
    CHECK(run({"ell", "--genus", "2", "--punctures", "0", "--method", "closed"}).out ==
          "closed=5\n");
    CHECK(run({"ell", "--genus", "2", "--punctures", "0", "--method", "recursive"}).out ==
          "recursive=5\n");

    const CliResult json = run({"ell", "--genus", "3", "--punctures", "4", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["closed"] == 11);
    CHECK(doc["recursive"] == 11);
    CHECK(doc["genus"] == 3);
}

TEST_CASE("complexity query") {
    CHECK(run({"xi", "--genus", "5", "--punctures", "0"}).out == "xi=12\n");
    const CliResult json = run({"xi", "--genus", "0", "--punctures", "4", "--json"});
    CHECK(nlohmann::json::parse(json.out)["xi"] == 1);
}

TEST_CASE("table output") {
    const CliResult md = run({"table", "--max-genus", "1", "--max-punctures", "3"});
    CHECK(md.code == 0);
    CHECK(md.out ==
          "| g\\p | 0 | 1 | 2 | 3 |\n"
          "| --- | --- | --- | --- | --- |\n"
          "| 0 | 0 | 0 | 0 | 0 |\n"
          "| 1 | 2 | 2 | 4 | 5 |\n");
    CHECK(run({"table", "--max-genus", "1", "--max-punctures", "3", "--markdown"}).out == md.out);

    const CliResult json = run({"table", "--max-genus", "2", "--max-punctures", "2", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["ell"][2][0] == 5);
    CHECK(doc["ell"][0][2] == 0);
}

TEST_CASE("grid verification command") {
    const CliResult r = run({"verify", "grid", "--max-genus", "1", "--max-punctures", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "cells=6 violations=0\n");

    const CliResult big = run({"verify", "grid", "--max-genus", "12", "--max-punctures", "24"});
    CHECK(big.code == 0);
    CHECK(big.out == "cells=325 violations=0\n");

    const CliResult json = run({"verify", "grid", "--max-genus", "2", "--max-punctures", "2", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["cells"] == 9);
}

TEST_CASE("witness commands") {
    const CliResult text = run({"witness", "path", "--genus", "1", "--punctures", "3"});
    CHECK(text.code == 0);
    CHECK(text.out ==
          "surface=S_{1,3} pattern=path length=5\n"
          "curves: CC(1) CC(2) CC(3) EC(1) EC(2)\n"
          "edges: 0-1 1-2 2-3 3-4\n");

    const CliResult json = run({"witness", "cycle", "--genus", "0", "--punctures", "6", "--json"});
    CHECK(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["pattern"] == "cycle");
    CHECK(doc["curves"].size() == 6);
    CHECK(doc["edges"].size() == 6);

    const CliResult dot = run({"witness", "path", "--genus", "0", "--punctures", "5", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") != std::string::npos);
    CHECK(dot.out.find("I[1,2]") != std::string::npos);

    // no closed-chain witness family covers the twice-punctured torus
    const CliResult bad = run({"witness", "cycle", "--genus", "1", "--punctures", "2"});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
    CHECK(bad.out.empty());
}

TEST_CASE("decision commands") {
    const CliResult no = run({"decide", "cycle-braid", "--m", "4", "--strands", "3"});
    CHECK(no.code == 0);
    CHECK(no.out == "No\n");

    CHECK(run({"decide", "path-braid", "--m", "4", "--strands", "4"}).out == "Yes\n");
    CHECK(run({"decide", "path-braid", "--m", "4", "--strands", "4", "--pure"}).out == "Yes\n");
    CHECK(run({"decide", "path-mcg", "--m", "11", "--genus", "3", "--punctures", "4"}).out ==
          "Yes\n");
    CHECK(run({"decide", "cycle-mcg", "--m", "4", "--genus", "1", "--punctures", "2"}).out ==
          "OutOfScope\n");

    const CliResult json =
        run({"decide", "path-mcg", "--m", "3", "--genus", "0", "--punctures", "5", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["answer"] == "Yes");
    CHECK(doc["max"] == 4);

    const CliResult domain = run({"decide", "cycle-mcg", "--m", "2", "--genus", "0", "--punctures", "5"});
    CHECK(domain.code == 2);
    CHECK(!domain.err.empty());
}

TEST_CASE("obstruction commands") {
    CHECK(run({"obstruct", "virtual", "--source", "2,0", "--target", "3,0"}).out ==
          "NoObstructionFound\n");
    CHECK(run({"obstruct", "virtual", "--source", "2,5", "--target", "3,2"}).out == "Obstructed\n");
    CHECK(run({"obstruct", "braid", "--strands", "5", "--target", "2,0"}).out == "Obstructed\n");
    CHECK(run({"obstruct", "braid", "--strands", "5", "--target", "2,0", "--boundary", "1"}).out ==
          "NoObstructionFound\n");
    CHECK(run({"obstruct", "braid", "--strands", "5", "--target", "2,0", "--boundary", "2"}).out ==
          "OutOfScope\n");
    CHECK(run({"obstruct", "sphere-closed", "--punctures", "6", "--genus", "2"}).out == "Yes\n");
    CHECK(run({"obstruct", "sphere-closed", "--punctures", "7", "--genus", "2"}).out == "No\n");
    CHECK(run({"rigidity", "--source", "3,2", "--target", "3,2"}).out == "Yes\n");
    CHECK(run({"rigidity", "--source", "2,4", "--target", "3,1"}).out == "Obstructed\n");

    const CliResult json =
        run({"obstruct", "virtual", "--source", "2,13", "--target", "5,0", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["answer"] == "Obstructed");
    CHECK(doc["reasons"].size() == 4);
    CHECK(doc["reasons"][0]["name"] == "xi");
}

TEST_CASE("raag commands") {
    const std::string graph_file = write_temp("raagmcg_cli_p3.json", kPathGraph);

    // u and w commute (no edge), so the conjugation cancels
    CHECK(run({"raag", "nf", "--graph", graph_file, "--word", "w u w^-1"}).out == "u\n");
    CHECK(run({"raag", "nf", "--graph", graph_file, "--word", ""}).out == "\n");
    const CliResult json =
        run({"raag", "nf", "--graph", graph_file, "--word", "u u^-1", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["trivial"] == true);
    CHECK(doc["normal_form"] == "");

    CHECK(run({"raag", "center", "--graph", graph_file}).out == "centerless=true\n");
    const std::string isolated = write_temp(
        "raagmcg_cli_iso.json", R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"]]})");
    CHECK(run({"raag", "center", "--graph", isolated}).out == "centerless=false\n");

    CHECK(run({"raag", "nf", "--graph", graph_file, "--word", "z"}).code == 2);
    CHECK(run({"raag", "nf", "--graph", "/nonexistent.json", "--word", "u"}).code == 2);
}

TEST_CASE("raag lift command") {
    const std::string mvh_file = write_temp("raagmcg_cli_mvh.json", R"({
        "source": {"vertices": ["v1", "v2", "v3"], "edges": [["v1", "v2"], ["v2", "v3"]]},
        "target": {"vertices": ["u1", "u2", "u3"], "edges": [["u1", "u2"], ["u2", "u3"]]},
        "assignment": {"v1": ["u1", "u3"], "v2": ["u2"], "v3": ["u3"]}
    })");
    const CliResult lifted = run({"raag", "lift", "--graph", mvh_file, "--word", "u1 u2 u3"});
    CHECK(lifted.code == 0);
    CHECK(lifted.out == "lift: v1 v2 v3\n");

    const CliResult json =
        run({"raag", "lift", "--graph", mvh_file, "--word", "u1 u2 u3", "--json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["found"] == true);
    CHECK(doc["lift"][0] == "v1");

    const std::string sparse_file = write_temp("raagmcg_cli_sparse.json", R"({
        "source": {"vertices": ["x1", "x2"], "edges": []},
        "target": {"vertices": ["u1", "u2"], "edges": [["u1", "u2"]]},
        "assignment": {"x1": ["u1"], "x2": ["u2"]}
    })");
    const CliResult missing = run({"raag", "lift", "--graph", sparse_file, "--word", "u1 u2"});
    CHECK(missing.code == 0);
    CHECK(missing.out == "no lift\n");

    const std::string invalid_file = write_temp("raagmcg_cli_badmvh.json", R"({
        "source": {"vertices": ["v1", "v2"], "edges": [["v1", "v2"]]},
        "target": {"vertices": ["u1", "u2"], "edges": [["u1", "u2"]]},
        "assignment": {"v1": ["u1"], "v2": ["u1"]}
    })");
    const CliResult invalid = run({"raag", "lift", "--graph", invalid_file, "--word", "u1"});
    CHECK(invalid.code == 2);
    CHECK(!invalid.err.empty());

    CHECK(run({"raag", "lift", "--graph", mvh_file, "--word", "u1 u3"}).code == 2);
}

TEST_CASE("usage and error codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"decide", "path-mcg"}).code == 1);  // missing required flags
    CHECK(run({"ell", "--genus", "0"}).code == 1);
    CHECK(run({"ell", "--genus", "x", "--punctures", "1"}).code == 1);
    CHECK(run({"obstruct", "virtual", "--source", "x,y", "--target", "2,0"}).code == 1);
    CHECK(run({"obstruct", "braid", "--strands", "5", "--target", "2,0", "--boundary", "7"}).code ==
          1);
    CHECK(run({"ell", "--genus", "0", "--punctures", "5", "--method", "sideways"}).code == 1);
    CHECK(run({"witness", "path", "--genus", "0", "--punctures", "5", "--json", "--dot"}).code == 1);

    CHECK(run({"ell", "--genus", "-1", "--punctures", "0"}).code == 2);  // invalid surface
    CHECK(run({"witness", "path", "--genus", "0", "--punctures", "2"}).code == 2);

    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("raagmcg") != std::string::npos);
}

TEST_CASE("byte-identical output for identical invocations") {
    const std::vector<std::vector<std::string>> cases = {
        {"table", "--max-genus", "3", "--max-punctures", "6"},
        {"witness", "path", "--genus", "2", "--punctures", "2", "--json"},
        {"obstruct", "virtual", "--source", "2,13", "--target", "5,0", "--json"},
        {"verify", "grid", "--max-genus", "4", "--max-punctures", "6", "--json"},
    };
    for (const auto& argv : cases) {
        const CliResult a = run(argv);
        const CliResult b = run(argv);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
