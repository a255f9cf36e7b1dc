#include "truemper/cli.hpp"

#include "truemper/detectors.hpp"
#include "truemper/io.hpp"
#include "truemper/oracle.hpp"
#include "truemper/patterns.hpp"
#include "truemper/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <map>

namespace truemper {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + ": expected an integer, got '" + s + "'");
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + ": expected a number, got '" + s + "'");
}

GraphFormat format_of(const std::string& name) { return name == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList; }

std::optional<Stage> stage_of(const std::string& name) {
    for (Stage s : {Stage::Pyramid, Stage::Theta, Stage::LongPrism, Stage::BrokenWheel})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

/// Graphs from a file with their report identifiers.
std::vector<std::pair<std::string, Graph>> load(const std::string& path, GraphFormat format) {
    const std::string text = read_file(path);
    auto graphs = parse_graphs(text, format);
    std::vector<std::pair<std::string, Graph>> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out.emplace_back(format == GraphFormat::Graph6 ? path + ":" + std::to_string(i + 1) : path, std::move(graphs[i]));
    return out;
}

// ------------------------------------------------------------------- detect

struct DetectArgs {
    std::string file;
    std::string format = "edgelist";
    std::string stage;
    bool witness = false;
    bool model = false;
    bool no_timings = false;
    unsigned threads = 0;
};

int cmd_detect(const DetectArgs& a, std::ostream& out) {
    DetectOptions options;
    options.threads = a.threads;
    if (!a.stage.empty()) options.only_stage = stage_of(a.stage);
    ReportOptions ro{a.witness, a.model, !a.no_timings, options.only_stage};
    for (const auto& [id, g] : load(a.file, format_of(a.format))) {
        const DetectionResult r = detect_k23_induced_minor(g, options);
        out << detection_report(id, g, r, ro).dump() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- oracle

struct OracleArgs {
    std::string file;
    std::string format = "edgelist";
    std::string method = "model";
    bool force = false;
};

json oracle_report(const std::string& id, const Graph& g, const std::string& method, bool force) {
    const int limit = method == "separators" ? kSeparatorOracleLimit : kSmallOracleLimit;
    if (g.order() > limit && !force)
        throw OracleSizeError(id + ": " + std::to_string(g.order()) + " vertices exceeds the " + method + " oracle limit of " +
                              std::to_string(limit) + " (use --force)");
    json j;
    j["schema"] = kOracleSchema;
    j["input"] = id;
    j["method"] = method;
    j["vertices"] = g.order();
    j["edges"] = g.size();
    if (method == "model") {
        const auto m = find_k23_model(g);
        j["contains_k23"] = m.has_value();
        if (m) j["model"] = to_json(*m);
    } else if (method == "separators") {
        const auto v = find_separator_violation(g);
        j["contains_k23"] = v.has_value();
        if (v) {
            j["separator"] = to_json(v->separator.set);
            j["independent_triple"] = v->independent_triple;
            j["full_components"] = {to_json(v->separator.full_a), to_json(v->separator.full_b)};
        }
    } else {
        const auto w = find_config_exhaustive(g, SearchTarget::Any);
        j["contains_k23"] = w.has_value();
        if (w) j["witness"] = to_json(g, *w);
    }
    return j;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    for (const auto& [id, g] : load(a.file, format_of(a.format))) out << oracle_report(id, g, a.method, a.force).dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- gen

struct GenArgs {
    std::string pattern;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string out_file;
    std::string format = "edgelist";
    int background = 4;
    double edge_prob = 0.3;
};

ConfigSpec spec_from(const std::string& kind, const std::vector<std::string>& params, std::size_t from) {
    std::vector<int> lengths;
    for (std::size_t i = from; i < params.size(); ++i) lengths.push_back(to_int(params[i], kind + " length"));
    ConfigSpec spec;
    if (kind == "broken-wheel") {
        spec = broken_wheel_spec(lengths);
    } else {
        if (lengths.size() != 3) throw UsageError(kind + " takes exactly three path lengths");
        if (kind == "theta") spec = theta_spec(lengths[0], lengths[1], lengths[2]);
        else if (kind == "pyramid") spec = pyramid_spec(lengths[0], lengths[1], lengths[2]);
        else if (kind == "prism") spec = prism_spec(lengths[0], lengths[1], lengths[2]);
        else throw UsageError("unknown configuration '" + kind + "'");
    }
    if (auto err = config_spec_violation(spec); !err.empty()) throw UsageError(err);
    return spec;
}

Graph generate(const GenArgs& a) {
    const auto& p = a.params;
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw UsageError(a.pattern + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (a.pattern == "theta" || a.pattern == "pyramid" || a.pattern == "prism" || a.pattern == "broken-wheel")
        return make_config(spec_from(a.pattern, p, 0)).graph;
    if (a.pattern == "plant") {
        if (p.empty()) throw UsageError("plant takes a configuration kind and its lengths");
        if (a.background < 0) throw UsageError("--background must be nonnegative");
        if (a.edge_prob < 0 || a.edge_prob > 1) throw UsageError("--edge-prob must lie in [0, 1]");
        return plant(spec_from(p[0], p, 1), a.background, a.edge_prob, a.seed);
    }
    if (a.pattern == "gk") {
        need(1);
        const int k = to_int(p[0], "k");
        if (k < 1) throw UsageError("gk needs k >= 1");
        return make_gk(k);
    }
    if (a.pattern == "random") {
        need(2);
        const int n = to_int(p[0], "n");
        const double prob = to_double(p[1], "p");
        if (n < 0 || prob < 0 || prob > 1) throw UsageError("random needs n >= 0 and p in [0, 1]");
        return random_graph(n, prob, a.seed);
    }
    if (a.pattern == "chordal") {
        need(1);
        const int n = to_int(p[0], "n");
        if (n < 0) throw UsageError("chordal needs n >= 0");
        return random_chordal(n, a.seed);
    }
    need(0);
    try {
        return make_named(a.pattern).graph;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const Graph g = generate(a);
    const std::string text = a.format == "graph6" ? render_graph6(g) + "\n" : render_edge_list(g);
    if (a.out_file.empty()) out << text;
    else write_file(a.out_file, text);
    return kExitOk;
}

// ------------------------------------------------------------------- xcheck

struct XcheckArgs {
    int n = 6;
    std::string count = "100";
    double p = 0.5;
    std::uint64_t seed = 1;
    bool force = false;
    unsigned threads = 1;
};

constexpr std::array<const char*, 4> kMethods{"pipeline", "model", "separators", "exhaustive"};

std::array<bool, 4> all_answers(const Graph& g, unsigned threads) {
    DetectOptions o;
    o.threads = threads;
    return {detect_k23_induced_minor(g, o).contains_k23, find_k23_model(g).has_value(), !k23_free_by_separators(g),
            find_config_exhaustive(g, SearchTarget::Any).has_value()};
}

int cmd_xcheck(const XcheckArgs& a, std::ostream& out) {
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    if (a.p < 0 || a.p > 1) throw UsageError("--p must lie in [0, 1]");
    if (a.n > kSmallOracleLimit && !a.force)
        throw OracleSizeError("--n " + std::to_string(a.n) + " exceeds the oracle limit of " + std::to_string(kSmallOracleLimit) +
                              " (use --force)");
    const bool exhaustive = a.count == "exhaustive";
    long long total = 0;
    if (exhaustive) {
        if (a.n > 7) throw UsageError("--count exhaustive supports n <= 7");
        total = 1LL << (a.n * (a.n - 1) / 2);
    } else {
        total = to_int(a.count, "--count");
        if (total < 0) throw UsageError("--count must be nonnegative");
    }

    std::vector<Edge> slots;
    for (Vertex j = 1; j < a.n; ++j)
        for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);

    Rng seeds(a.seed);
    std::array<std::array<long long, 4>, 4> agree{};
    long long unanimous = 0, positives = 0;
    json counterexamples = json::array();
    for (long long k = 0; k < total; ++k) {
        Graph g;
        if (exhaustive) {
            std::vector<Edge> edges;
            for (std::size_t e = 0; e < slots.size(); ++e)
                if (k >> e & 1) edges.push_back(slots[e]);
            g = Graph::from_edges(a.n, edges);
        } else {
            g = random_graph(a.n, a.p, seeds.next());
        }
        const auto ans = all_answers(g, a.threads);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) agree[i][j] += ans[i] == ans[j] ? 1 : 0;
        const bool same = std::all_of(ans.begin(), ans.end(), [&](bool b) { return b == ans[0]; });
        unanimous += same ? 1 : 0;
        positives += same && ans[0] ? 1 : 0;
        if (!same && counterexamples.size() < 10) {
            json c;
            c["graph"] = render_edge_list(g);
            for (std::size_t i = 0; i < 4; ++i) c["answers"][kMethods[i]] = ans[i];
            counterexamples.push_back(c);
        }
    }

    json j;
    j["schema"] = kXcheckSchema;
    j["n"] = a.n;
    j["count"] = exhaustive ? json("exhaustive") : json(total);
    if (!exhaustive) {
        j["p"] = a.p;
        j["seed"] = a.seed;
    }
    j["graphs"] = total;
    j["agreement"] = unanimous;
    j["positives"] = positives;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) j["matrix"][kMethods[i]][kMethods[k]] = agree[i][k];
    j["counterexamples"] = counterexamples;
    out << j.dump() << "\n";
    return unanimous == total ? kExitOk : kExitDisagreement;
}

// -------------------------------------------------------------------- bench

struct BenchArgs {
    int n = 25;
    double p = 0.15;
    int count = 5;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.n < 0 || a.count < 0) throw UsageError("--n and --count must be nonnegative");
    if (a.p < 0 || a.p > 1) throw UsageError("--p must lie in [0, 1]");
    Rng seeds(a.seed);
    json runs = json::array();
    std::map<std::string, int> stages;
    double total_ms = 0, worst_ms = 0;
    for (int i = 0; i < a.count; ++i) {
        const std::uint64_t s = seeds.next();
        const Graph g = random_graph(a.n, a.p, s);
        const auto t0 = std::chrono::steady_clock::now();
        DetectOptions o;
        o.threads = a.threads;
        const DetectionResult r = detect_k23_induced_minor(g, o);
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        const std::string stage = r.stage ? std::string(to_string(*r.stage)) : "none";
        ++stages[stage];
        total_ms += dt.count();
        worst_ms = std::max(worst_ms, dt.count());
        runs.push_back({{"seed", s}, {"edges", g.size()}, {"stage", stage}, {"ms", dt.count()}});
    }
    json j;
    j["schema"] = kBenchSchema;
    j["n"] = a.n;
    j["p"] = a.p;
    j["count"] = a.count;
    j["seed"] = a.seed;
    j["stages"] = stages;
    j["total_ms"] = total_ms;
    j["max_ms"] = worst_ms;
    j["runs"] = runs;
    out << j.dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detect K2,3 induced minors through Truemper configurations"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"edgelist", "graph6"};

    DetectArgs da;
    auto* detect = app.add_subcommand("detect", "Run the detection pipeline on a graph file");
    detect->add_option("file", da.file, "Input graph")->required();
    detect->add_option("--format", da.format, "Input format")->check(CLI::IsMember(formats));
    detect->add_option("--stage", da.stage, "Run a single stage (earlier stages still check its precondition)")
        ->check(CLI::IsMember({"pyramid", "theta", "long-prism", "broken-wheel"}));
    detect->add_flag("--witness", da.witness, "Include the witness");
    detect->add_flag("--model", da.model, "Include the K2,3 model");
    detect->add_flag("--no-timings", da.no_timings, "Omit per-stage timings");
    detect->add_option("--threads", da.threads, "Worker threads for the broken-wheel search (0: TRUEMPER_THREADS or 1)");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Run a brute-force oracle on a graph file");
    oracle->add_option("file", oa.file, "Input graph")->required();
    oracle->add_option("--format", oa.format, "Input format")->check(CLI::IsMember(formats));
    oracle->add_option("--method", oa.method, "Oracle")->check(CLI::IsMember({"model", "separators", "exhaustive"}));
    oracle->add_flag("--force", oa.force, "Ignore the size limits");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("pattern", ga.pattern,
                    "theta|pyramid|prism|broken-wheel|plant|gk|random|chordal|cube|co-domino|net|k23|c<n>|k<n>|p<n>")
        ->required();
    gen->add_option("params", ga.params, "Pattern parameters");
    gen->add_option("--seed", ga.seed, "Random seed");
    gen->add_option("--out", ga.out_file, "Output file (default: standard output)");
    gen->add_option("--format", ga.format, "Output format")->check(CLI::IsMember(formats));
    gen->add_option("--background", ga.background, "plant: number of background vertices");
    gen->add_option("--edge-prob", ga.edge_prob, "plant: edge probability");

    XcheckArgs xa;
    auto* xcheck = app.add_subcommand("xcheck", "Compare the pipeline with every oracle");
    xcheck->add_option("--n", xa.n, "Vertices per graph");
    xcheck->add_option("--count", xa.count, "Number of random graphs, or 'exhaustive' for all labeled graphs");
    xcheck->add_option("--p", xa.p, "Edge probability");
    xcheck->add_option("--seed", xa.seed, "Random seed");
    xcheck->add_option("--threads", xa.threads, "Worker threads for the broken-wheel search");
    xcheck->add_flag("--force", xa.force, "Ignore the size limits");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time the pipeline on random graphs");
    bench->add_option("--n", ba.n, "Vertices per graph");
    bench->add_option("--p", ba.p, "Edge probability");
    bench->add_option("--count", ba.count, "Number of graphs");
    bench->add_option("--seed", ba.seed, "Random seed");
    bench->add_option("--threads", ba.threads, "Worker threads (0: TRUEMPER_THREADS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*detect) return cmd_detect(da, out);
        if (*oracle) return cmd_oracle(oa, out);
        if (*gen) return cmd_gen(ga, out);
        if (*xcheck) return cmd_xcheck(xa, out);
        if (*bench) return cmd_bench(ba, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitParse;
    } catch (const OracleSizeError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitOracleSize;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace truemper
