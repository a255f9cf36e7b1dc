#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truemper/cli.hpp"
#include "truemper/detectors.hpp"
#include "truemper/io.hpp"
#include "truemper/patterns.hpp"
#include "truemper/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace truemper;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "truemper");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Scratch directory removed at the end of each test case.
struct Scratch {
    std::filesystem::path dir;
    Scratch() {
        dir = std::filesystem::temp_directory_path() /
              ("truemper-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name, const std::string& contents) const {
        const auto p = (dir / name).string();
        write_file(p, contents);
        return p;
    }
};

std::vector<Graph> corpus() {
    std::vector<Graph> out{Graph(0), Graph(1), Graph(7)};
    for (const char* name : {"k23", "cube", "net", "co-domino", "c10", "k8", "p5"}) out.push_back(make_named(name).graph);
    for (int k = 1; k <= 3; ++k) out.push_back(make_gk(k));
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        out.push_back(random_graph(static_cast<int>(seed * 3 % 70), 0.05 + 0.02 * static_cast<double>(seed % 20), seed));
    out.push_back(plant(broken_wheel_spec({1, 3, 2, 2}), 8, 0.3, 9));
    return out;
}

json strip_timings(json j) {
    j.erase("timings_ms");
    return j;
}

}  // namespace

TEST_CASE("edge list and graph6 round trips") {
    for (const Graph& g : corpus()) {
        CHECK(parse_edge_list(render_edge_list(g)) == g);
        CHECK(parse_graph6(render_graph6(g)) == g);
    }
}

TEST_CASE("graph6 known encodings") {
    // Standard examples from the format description.
    CHECK(render_graph6(Graph(0)) == "?");
    CHECK(render_graph6(make_named("k4").graph) == "C~");
    CHECK(parse_graph6(">>graph6<<C~") == make_named("k4").graph);
    CHECK(render_graph6(Graph(63)).substr(0, 4) == "~??~");
    CHECK(parse_graph6_lines("C~\n\nA_\n").size() == 2);
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("# a path\n3 2\n0 1   # first\n\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);
    CHECK_THROWS_AS(parse_graph6("&DI?AO?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // nonzero padding
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
}

TEST_CASE("gen examples") {
    auto r = cli({"gen", "gk", "1"});
    CHECK(r.code == kExitOk);
    const Graph c4 = parse_edge_list(r.out);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(is_connected(c4));

    const Graph cube = parse_edge_list(cli({"gen", "cube"}).out);
    CHECK(cube.order() == 8);
    CHECK(cube.size() == 12);

    const Graph theta = parse_edge_list(cli({"gen", "theta", "2", "2", "2"}).out);
    CHECK(theta == make_named("k23").graph);

    CHECK(cli({"gen", "plant", "pyramid", "1", "2", "3", "--seed", "5"}).out ==
          cli({"gen", "plant", "pyramid", "1", "2", "3", "--seed", "5"}).out);
    CHECK(cli({"gen", "random", "10", "0.4", "--seed", "3", "--format", "graph6"}).out ==
          render_graph6(random_graph(10, 0.4, 3)) + "\n");

    CHECK(cli({"gen", "theta", "1", "1", "2"}).code == kExitUsage);
    CHECK(cli({"gen", "dodecahedron"}).code == kExitUsage);
    CHECK(cli({"gen", "gk"}).code == kExitUsage);
    CHECK(cli({"gen", "random", "5", "1.5"}).code == kExitUsage);
}

TEST_CASE("detect reports") {
    Scratch s;
    const auto k23 = s.file("k23.txt", render_edge_list(make_named("k23").graph));
    auto r = cli({"detect", k23});
    REQUIRE(r.code == kExitOk);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == kDetectSchema);
    CHECK(j["contains_k23"] == true);
    CHECK(j["stage"] == "theta");
    CHECK_FALSE(j.contains("witness"));
    CHECK(j.contains("timings_ms"));

    const auto c10 = s.file("c10.txt", render_edge_list(make_named("c10").graph));
    auto jc = json::parse(cli({"detect", c10, "--witness", "--model"}).out);
    CHECK(jc["contains_k23"] == false);
    CHECK(jc["stage"] == "none");
    CHECK_FALSE(jc.contains("witness"));
    CHECK_FALSE(jc.contains("model"));

    const Graph cube_graph = make_named("cube").graph;
    const auto cube = s.file("cube.txt", render_edge_list(cube_graph));
    auto jb = json::parse(cli({"detect", cube, "--stage", "broken-wheel", "--witness", "--model", "--no-timings"}).out);
    CHECK(jb["contains_k23"] == true);
    CHECK(jb["stage"] == "broken-wheel");
    CHECK(jb["scope"] == "broken-wheel");
    CHECK(jb["precondition_violated"] == false);
    CHECK_FALSE(jb.contains("timings_ms"));
    REQUIRE(jb.contains("witness"));
    CHECK(validate_witness(cube_graph, witness_from_json(jb["witness"])));
    CHECK(jb["model"].size() == 5);

    auto jp = json::parse(cli({"detect", k23, "--stage", "long-prism"}).out);
    CHECK(jp["precondition_violated"] == true);
    CHECK(jp["stage"] == "theta");
}

TEST_CASE("detect on a graph6 corpus emits one line per graph") {
    Scratch s;
    std::string text;
    const std::vector<Graph> gs{make_named("k23").graph, make_named("c6").graph, make_named("cube").graph};
    for (const auto& g : gs) text += render_graph6(g) + "\n";
    const auto path = s.file("corpus.g6", text);
    auto r = cli({"detect", path, "--format", "graph6", "--witness"});
    REQUIRE(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line)) reports.push_back(json::parse(line));
    REQUIRE(reports.size() == 3);
    CHECK(reports[0]["input"] == path + ":1");
    CHECK(reports[2]["input"] == path + ":3");
    CHECK(reports[1]["contains_k23"] == false);
    for (std::size_t i : {0u, 2u}) CHECK(validate_witness(gs[i], witness_from_json(reports[i]["witness"])));
}

TEST_CASE("reports are deterministic apart from timings and witnesses re-validate") {
    Scratch s;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = seed % 2 ? random_graph(12, 0.25, seed) : plant(broken_wheel_spec({2, 2, 1}), 5, 0.3, seed);
        const auto path = s.file("g" + std::to_string(seed) + ".txt", render_edge_list(g));
        auto a = cli({"detect", path, "--witness", "--model"});
        auto b = cli({"detect", path, "--witness", "--model", "--threads", "3"});
        REQUIRE(a.code == kExitOk);
        const auto ja = json::parse(a.out);
        CHECK(strip_timings(ja) == strip_timings(json::parse(b.out)));
        CHECK(cli({"detect", path, "--no-timings"}).out == cli({"detect", path, "--no-timings"}).out);
        if (ja["contains_k23"] == true) CHECK(validate_witness(g, witness_from_json(ja["witness"])));
    }
}

TEST_CASE("report helpers") {
    const auto pyr = make_config(pyramid_spec(1, 2, 2));
    const json w = to_json(pyr.graph, pyr.witness);
    CHECK(w["kind"] == "pyramid");
    CHECK(w["paths"][0] == json::array({0, 1}));
    const Witness back = witness_from_json(w);
    CHECK(witness_vertices(back) == witness_vertices(pyr.witness));
    CHECK(validate_witness(pyr.graph, back));
    CHECK_THROWS_AS(witness_from_json(json{{"kind", "hexagon"}}), std::invalid_argument);
    CHECK_THROWS_AS(witness_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("oracle command") {
    Scratch s;
    const auto k23 = s.file("k23.txt", render_edge_list(make_named("k23").graph));
    auto j = json::parse(cli({"oracle", k23, "--method", "separators"}).out);
    CHECK(j["schema"] == kOracleSchema);
    CHECK(j["contains_k23"] == true);
    CHECK(j["separator"].size() == 3);

    const auto tree = s.file("tree.txt", "5 4\n0 1\n1 2\n1 3\n3 4\n");
    CHECK(json::parse(cli({"oracle", tree, "--method", "model"}).out)["contains_k23"] == false);

    const auto prism = s.file("prism.txt", render_edge_list(make_config(prism_spec(1, 1, 1)).graph));
    CHECK(json::parse(cli({"oracle", prism, "--method", "exhaustive"}).out)["contains_k23"] == false);

    const auto big = s.file("c15.txt", render_edge_list(make_named("c15").graph));
    CHECK(cli({"oracle", big, "--method", "model"}).code == kExitOracleSize);
    CHECK(cli({"oracle", big, "--method", "exhaustive"}).code == kExitOracleSize);
    CHECK(cli({"oracle", big, "--method", "separators"}).code == kExitOk);
    auto forced = cli({"oracle", big, "--method", "model", "--force"});
    CHECK(forced.code == kExitOk);
    CHECK(json::parse(forced.out)["contains_k23"] == false);
    const auto huge = s.file("c21.txt", render_edge_list(make_named("c21").graph));
    CHECK(cli({"oracle", huge, "--method", "separators"}).code == kExitOracleSize);
}

TEST_CASE("xcheck command") {
    auto r = cli({"xcheck", "--n", "0", "--count", "1"});
    REQUIRE(r.code == kExitOk);
    auto j = json::parse(r.out);
    CHECK(j["agreement"] == 1);
    CHECK(j["positives"] == 0);

    auto r5 = cli({"xcheck", "--n", "5", "--count", "exhaustive"});
    REQUIRE(r5.code == kExitOk);
    auto j5 = json::parse(r5.out);
    CHECK(j5["graphs"] == 1024);
    CHECK(j5["agreement"] == 1024);
    CHECK(j5["counterexamples"].empty());

    auto r10 = cli({"xcheck", "--n", "10", "--count", "100", "--p", "0.3", "--seed", "7"});
    CHECK(r10.code == kExitOk);
    CHECK(json::parse(r10.out)["agreement"] == 100);
    CHECK(r10.out == cli({"xcheck", "--n", "10", "--count", "100", "--p", "0.3", "--seed", "7"}).out);

    CHECK(cli({"xcheck", "--n", "15", "--count", "1"}).code == kExitOracleSize);
    CHECK(cli({"xcheck", "--n", "8", "--count", "exhaustive"}).code == kExitUsage);
    CHECK(cli({"xcheck", "--n", "5", "--p", "2"}).code == kExitUsage);
}

TEST_CASE("bench command") {
    auto r = cli({"bench", "--n", "15", "--p", "0.2", "--count", "3"});
    REQUIRE(r.code == kExitOk);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == kBenchSchema);
    CHECK(j["runs"].size() == 3);
}

TEST_CASE("exit codes for bad invocations") {
    Scratch s;
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"detect"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    CHECK(cli({"detect", (s.dir / "missing.txt").string()}).code == kExitParse);
    const auto bad = s.file("bad.txt", "3 1\n0 7\n");
    auto r = cli({"detect", bad});
    CHECK(r.code == kExitParse);
    CHECK_FALSE(r.err.empty());
    const auto ok = s.file("ok.txt", "2 1\n0 1\n");
    CHECK(cli({"detect", ok, "--stage", "hexagon"}).code == kExitUsage);
    CHECK(cli({"detect", ok, "--format", "sparse6"}).code == kExitUsage);
    CHECK(cli({"detect", ok, "--format", "graph6"}).code == kExitParse);
}
