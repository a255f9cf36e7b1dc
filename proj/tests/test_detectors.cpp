#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truemper/detectors.hpp"
#include "truemper/frame.hpp"
#include "truemper/oracle.hpp"
#include "truemper/patterns.hpp"

#include <algorithm>
#include <set>

using namespace truemper;

namespace {

Graph edges_graph(int n, std::initializer_list<Edge> es) { return Graph::from_edges(n, std::vector<Edge>(es)); }

/// Definition-level broken wheel test: some x in s leaves a hole, sees at
/// least three of its vertices, and cuts it into at least two sectors of
/// length >= 2.
bool brute_broken_wheel(const Graph& g, const VertexSet& s) {
    for (Vertex x : s) {
        std::vector<Vertex> rest;
        for (Vertex v : s)
            if (v != x) rest.push_back(v);
        if (rest.size() < 4) continue;
        bool regular = true;
        for (Vertex v : rest) {
            int d = 0;
            for (Vertex w : rest) d += g.adjacent(v, w);
            regular = regular && d == 2;
        }
        if (!regular) continue;
        // Walk the cycle from rest[0].
        std::vector<Vertex> cycle{rest[0]};
        Vertex prev = -1, cur = rest[0];
        while (true) {
            Vertex next = -1;
            for (Vertex w : rest)
                if (w != prev && g.adjacent(cur, w)) {
                    next = w;
                    break;
                }
            if (next == rest[0]) break;
            cycle.push_back(next);
            prev = cur;
            cur = next;
        }
        if (cycle.size() != rest.size()) continue;
        std::vector<int> spokes;
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
            if (g.adjacent(x, cycle[static_cast<std::size_t>(i)])) spokes.push_back(i);
        if (spokes.size() < 3) continue;
        int long_sectors = 0;
        const int len = static_cast<int>(cycle.size());
        for (std::size_t i = 0; i < spokes.size(); ++i) {
            const int gap = (spokes[(i + 1) % spokes.size()] - spokes[i] + len) % len;
            if (gap >= 2) ++long_sectors;
        }
        if (long_sectors >= 2) return true;
    }
    return false;
}

std::set<std::vector<Vertex>> as_set(const std::vector<VertexSet>& parts) {
    std::set<std::vector<Vertex>> out;
    for (const auto& p : parts) out.insert(p.to_vector());
    return out;
}

bool same_witness(const Witness& a, const Witness& b) {
    if (a.index() != b.index() || witness_vertices(a) != witness_vertices(b)) return false;
    if (auto* wa = std::get_if<BrokenWheel>(&a)) {
        const auto& wb = std::get<BrokenWheel>(b);
        return wa->center == wb.center && wa->rim == wb.rim;
    }
    return true;
}

/// Wheel grid: 3..6 sectors, each of length 1..3 (thinned for 5 and 6).
std::vector<ConfigSpec> wheel_grid() {
    std::vector<ConfigSpec> out;
    for (int k = 3; k <= 6; ++k) {
        int total = 1;
        for (int i = 0; i < k; ++i) total *= 3;
        std::vector<int> sectors(static_cast<std::size_t>(k));
        for (int code = 0; code < total; code += k >= 5 ? 5 : 1) {
            int x = code;
            for (int i = 0; i < k; ++i, x /= 3) sectors[static_cast<std::size_t>(i)] = 1 + x % 3;
            auto spec = broken_wheel_spec(sectors);
            if (config_spec_violation(spec).empty()) out.push_back(spec);
        }
    }
    out.push_back(broken_wheel_spec({1, 4, 4}));
    out.push_back(broken_wheel_spec({4, 4, 4}));
    return out;
}

}  // namespace

TEST_CASE("witness validation examples") {
    const auto theta = make_config(theta_spec(2, 3, 2));
    CHECK(validate_witness(theta.graph, theta.witness));

    // Hubs 0 and 1 joined directly on one path.
    const Graph g = edges_graph(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});
    const Theta short_path{0, 1, {Path{0, 1}, Path{0, 2, 1}, Path{0, 3, 4, 1}}};
    CHECK_FALSE(validate_witness(g, short_path));

    // C5 with a universal center: every sector has length 1.
    const Graph full = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    CHECK_FALSE(validate_witness(full, BrokenWheel{{0, 1, 2, 3, 4}, 5}));

    // An extra edge between two paths breaks the theta.
    const Graph k23 = make_named("k23").graph;
    auto w = find_config_exhaustive(k23, SearchTarget::Theta);
    REQUIRE(w);
    CHECK(validate_witness(k23, *w));
    auto edges = k23.edges();
    const auto& th = std::get<Theta>(*w);
    edges.emplace_back(std::min(th.paths[0][1], th.paths[1][1]), std::max(th.paths[0][1], th.paths[1][1]));
    CHECK_FALSE(validate_witness(Graph::from_edges(5, edges), *w));

    // prism(1,1,1) is not long.
    const auto prism = make_config(prism_spec(1, 1, 1));
    CHECK(witness_violation(prism.graph, prism.witness) != "");
}

TEST_CASE("pyramid and theta detectors") {
    const auto pyr = make_config(pyramid_spec(1, 2, 2));
    auto w = detect_pyramid(pyr.graph);
    REQUIRE(w);
    CHECK(kind_of(*w) == ConfigKind::Pyramid);
    CHECK(validate_witness(pyr.graph, *w));
    CHECK_FALSE(detect_pyramid(make_named("cube").graph));
    CHECK_FALSE(detect_pyramid(make_named("k23").graph));

    auto t = detect_theta(make_named("k23").graph);
    REQUIRE(t);
    CHECK(kind_of(*t) == ConfigKind::Theta);
    for (const auto& p : std::get<Theta>(*t).paths) CHECK(p.size() == 3);
    CHECK_FALSE(detect_theta(make_named("cube").graph));
    CHECK_FALSE(detect_theta(make_named("c7").graph));
}

TEST_CASE("long prism detector examples") {
    for (const auto& spec : {prism_spec(2, 1, 1), prism_spec(2, 2, 2), prism_spec(1, 3, 4), prism_spec(4, 4, 4)}) {
        const auto cfg = make_config(spec);
        auto w = detect_long_prism(cfg.graph);
        REQUIRE(w);
        CHECK(kind_of(*w) == ConfigKind::LongPrism);
        CHECK(validate_witness(cfg.graph, *w));
        CHECK(witness_vertices(*w).size() == static_cast<std::size_t>(cfg.graph.order()));
    }
    CHECK_FALSE(detect_long_prism(make_config(prism_spec(1, 1, 1)).graph));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) CHECK_FALSE(detect_long_prism(random_chordal(16, seed)));
}

TEST_CASE("long prism detector reports a pyramid it runs into") {
    // The three path interiors hang off the triangle as a net; the apex is a
    // component seeing all three pendants.
    const auto cfg = make_config(pyramid_spec(2, 2, 2));
    try {
        auto w = detect_long_prism(cfg.graph);
        FAIL("expected a precondition violation");
    } catch (const PreconditionViolated& e) {
        CHECK(kind_of(e.evidence()) == ConfigKind::Pyramid);
        CHECK(validate_witness(cfg.graph, e.evidence()));
    }
}

TEST_CASE("long prism detector agrees with the exhaustive search on pyramid-free graphs") {
    int checked = 0, positives = 0;
    for (std::uint64_t seed = 1; checked < 250; ++seed) {
        const int n = 6 + static_cast<int>(seed % 7);
        const double p = 0.2 + 0.05 * static_cast<double>(seed % 7);
        Graph g = seed % 3 == 0 ? plant(prism_spec(1 + static_cast<int>(seed % 3), 1, 2), 3, 0.25, seed)
                                : random_graph(n, p, seed);
        if (detect_pyramid(g)) continue;
        ++checked;
        auto w = detect_long_prism(g);
        CAPTURE(seed);
        CHECK(w.has_value() == find_config_exhaustive(g, SearchTarget::LongPrism).has_value());
        if (w) {
            ++positives;
            CHECK(validate_witness(g, *w));
        }
    }
    CHECK(positives > 20);
}

TEST_CASE("is_broken_wheel examples") {
    // Rim 0..4, center 5 sees 0, 1, 3: sectors 1, 2, 2.
    const Graph w122 = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 3}});
    auto w = is_broken_wheel(w122, w122.all_vertices());
    REQUIRE(w);
    CHECK(w->center == 5);
    CHECK(w->rim == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(sector_lengths(w122, *w) == std::vector<int>{1, 2, 2});

    // Rim 0..3, center sees 0, 1, 2: sectors 1, 1, 2.
    const Graph w112 = edges_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    CHECK_FALSE(is_broken_wheel(w112, w112.all_vertices()));

    // C6 plus an isolated vertex.
    const Graph c6 = edges_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK_FALSE(is_broken_wheel(c6, c6.all_vertices()));

    const Graph cube = make_named("cube").graph;
    for (Vertex v = 0; v < 8; ++v) {
        VertexSet s = cube.all_vertices();
        s.erase(v);
        auto bw = is_broken_wheel(cube, s);
        REQUIRE(bw);
        CHECK(validate_witness(cube, *bw));
    }
}

TEST_CASE("is_broken_wheel matches the definition on every subset of small random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = random_graph(8, 0.35 + 0.01 * static_cast<double>(seed), seed);
        for (unsigned mask = 0; mask < 256; ++mask) {
            VertexSet s(8);
            for (int v = 0; v < 8; ++v)
                if (mask >> v & 1u) s.insert(v);
            auto bw = is_broken_wheel(g, s);
            CHECK(bw.has_value() == brute_broken_wheel(g, s));
            if (bw) {
                CHECK(validate_witness(g, *bw));
                auto vs = witness_vertices(*bw);
                CHECK(vs == s.to_vector());
            }
        }
    }
}

TEST_CASE("broken wheel detector examples") {
    const Graph w122 = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 3}});
    auto w = detect_broken_wheel(w122);
    REQUIRE(w);
    CHECK(validate_witness(w122, *w));

    const Graph cube = make_named("cube").graph;
    auto cw = detect_broken_wheel(cube);
    REQUIRE(cw);
    CHECK(witness_vertices(*cw).size() == 7);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = plant(broken_wheel_spec({1, 4, 4}), 4, 0.3, seed);
        auto found = detect_broken_wheel(g);
        CHECK(found.has_value() == find_config_exhaustive(g, SearchTarget::BrokenWheel).has_value());
        REQUIRE(found);
        CHECK(validate_witness(g, *found));
    }
    CHECK_FALSE(detect_broken_wheel(make_named("c9").graph));
    CHECK_FALSE(detect_broken_wheel(make_gk(3)));
}

TEST_CASE("every planted wheel has a frame that survives pruning and is enumerated") {
    for (const auto& spec : wheel_grid()) {
        const auto cfg = make_config(spec);
        const auto& wheel = std::get<BrokenWheel>(cfg.witness);
        const auto frames = frames_of(cfg.graph, wheel);
        CAPTURE(spec.lengths.size());
        REQUIRE_FALSE(frames.empty());
        std::vector<Frame> visited;
        for_each_frame(cfg.graph, wheel.center, [&](const Frame& f) {
            visited.push_back(f);
            return false;
        });
        bool any_rebuilds = false;
        for (const auto& f : frames) {
            CHECK(frame_violation(cfg.graph, f) == "");
            CHECK(std::find(visited.begin(), visited.end(), f) != visited.end());
            VertexSet s(cfg.graph.order());
            for (Vertex v : {f.x, f.a, f.b, f.c, f.d, f.a_plus, f.b_plus, f.c_plus, f.d_plus, f.a_minus, f.b_minus,
                             f.c_minus, f.d_minus})
                s.insert(v);
            for (const auto& p : connect_frame(cfg.graph, f))
                for (Vertex v : p) s.insert(v);
            if (broken_wheel_centered_at(cfg.graph, s, f.x)) any_rebuilds = true;
        }
        CHECK(any_rebuilds);
    }
}

TEST_CASE("enumerated frames all pass the frame checks") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(9, 0.4, seed);
        for (Vertex x = 0; x < g.order(); ++x)
            for_each_frame(g, x, [&](const Frame& f) {
                CHECK(f.x == x);
                CHECK(frame_violation(g, f) == "");
                return false;
            });
    }
}

TEST_CASE("broken wheel detector agrees with the exhaustive search on 3PC-free graphs") {
    int checked = 0, positives = 0;
    for (std::uint64_t seed = 1; checked < 200; ++seed) {
        Graph g;
        if (seed % 2 == 0) {
            Rng rng(seed);
            std::vector<int> sectors;
            const int k = 3 + rng.below(3);
            for (int i = 0; i < k; ++i) sectors.push_back(1 + rng.below(3));
            auto spec = broken_wheel_spec(sectors);
            if (!config_spec_violation(spec).empty()) continue;
            g = plant(spec, 2 + rng.below(3), 0.3, seed);
        } else {
            g = random_graph(6 + static_cast<int>(seed % 5), 0.3 + 0.05 * static_cast<double>(seed % 5), seed);
        }
        if (detect_pyramid(g) || detect_theta(g) || find_config_exhaustive(g, SearchTarget::LongPrism)) continue;
        ++checked;
        CAPTURE(seed);
        auto w = detect_broken_wheel(g);
        CHECK(w.has_value() == find_config_exhaustive(g, SearchTarget::BrokenWheel).has_value());
        if (w) {
            ++positives;
            CHECK(validate_witness(g, *w));
        }
    }
    CHECK(positives > 20);
}

TEST_CASE("broken wheel search is deterministic across thread counts") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = plant(broken_wheel_spec({2, 3, 1, 2}), 5, 0.3, seed);
        auto one = detect_broken_wheel(g, {1});
        auto four = detect_broken_wheel(g, {4});
        REQUIRE(one);
        REQUIRE(four);
        CHECK(same_witness(*one, *four));
    }
}

TEST_CASE("witness to model examples") {
    const Graph k23 = make_named("k23").graph;
    auto w = detect_theta(k23);
    REQUIRE(w);
    const auto m = witness_to_model(k23, *w);
    for (const auto* part : {&m.u, &m.v, &m.a, &m.b, &m.c}) CHECK(part->count() == 1);
    CHECK(is_valid_model(k23, m));

    // Rim v1..v5 = 0..4, x = 5 sees v1, v2, v4.
    const Graph w122 = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 3}});
    const auto wm = witness_to_model(w122, BrokenWheel{{0, 1, 2, 3, 4}, 5});
    CHECK(wm.u == VertexSet(6, {0, 1}));
    CHECK(wm.v == VertexSet(6, {3}));
    CHECK(as_set({wm.a, wm.b, wm.c}) == std::set<std::vector<Vertex>>{{5}, {2}, {4}});
    CHECK(is_valid_model(w122, wm));

    const auto prism = make_config(prism_spec(2, 1, 1));
    const auto pm = witness_to_model(prism.graph, prism.witness);
    const int n = prism.graph.order();
    CHECK(pm == InducedMinorModel{VertexSet(n, {0, 1}), VertexSet(n, {3, 5}), VertexSet(n, {6}), VertexSet(n, {2}),
                                  VertexSet(n, {4})});

    CHECK_THROWS_AS(witness_to_model(w122, BrokenWheel{{0, 1, 2, 3, 4}, 4}), std::invalid_argument);
}

TEST_CASE("witness to model is valid across the configuration grid") {
    std::vector<ConfigSpec> specs = wheel_grid();
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (auto spec : {theta_spec(a, b, c), pyramid_spec(a, b, c), prism_spec(a, b, c)})
                    if (config_spec_violation(spec).empty()) specs.push_back(spec);
    for (const auto& spec : specs) {
        const auto cfg = make_config(spec);
        // prism(1,1,1) is the one grid entry that is not a configuration.
        if (!validate_witness(cfg.graph, cfg.witness)) {
            CHECK(spec.lengths == std::vector<int>{1, 1, 1});
            continue;
        }
        CHECK(model_violation(cfg.graph, witness_to_model(cfg.graph, cfg.witness)) == "");
    }
}

TEST_CASE("pipeline examples") {
    const Graph k23 = make_named("k23").graph;
    auto r = detect_k23_induced_minor(k23);
    CHECK(r.contains_k23);
    CHECK(r.stage == Stage::Theta);
    REQUIRE(r.model);
    CHECK(is_valid_model(k23, *r.model));

    for (int n = 4; n <= 50; ++n) {
        auto rc = detect_k23_induced_minor(make_named("c" + std::to_string(n)).graph);
        CHECK_FALSE(rc.contains_k23);
        CHECK_FALSE(rc.stage);
        CHECK_FALSE(rc.witness);
        CHECK_FALSE(rc.model);
    }

    const Graph cube = make_named("cube").graph;
    auto rb = detect_k23_induced_minor(cube);
    CHECK(rb.contains_k23);
    CHECK(rb.stage == Stage::BrokenWheel);
    REQUIRE(rb.witness);
    CHECK(witness_vertices(*rb.witness).size() == 7);
    REQUIRE(rb.model);
    CHECK(is_valid_model(cube, *rb.model));
    CHECK(rb.timings.size() == 4);
}

TEST_CASE("single-stage runs") {
    const Graph cube = make_named("cube").graph;
    DetectOptions only_wheel;
    only_wheel.only_stage = Stage::BrokenWheel;
    auto r = detect_k23_induced_minor(cube, only_wheel);
    CHECK(r.contains_k23);
    CHECK(r.stage == Stage::BrokenWheel);
    CHECK_FALSE(r.precondition_violated);

    // A theta in front of the requested stage.
    auto rk = detect_k23_induced_minor(make_named("k23").graph, only_wheel);
    CHECK(rk.contains_k23);
    CHECK(rk.stage == Stage::Theta);
    CHECK(rk.precondition_violated);

    DetectOptions only_pyramid;
    only_pyramid.only_stage = Stage::Pyramid;
    auto rp = detect_k23_induced_minor(cube, only_pyramid);
    CHECK_FALSE(rp.contains_k23);
    CHECK_FALSE(rp.precondition_violated);
    CHECK(rp.timings.size() == 1);
}

TEST_CASE("pipeline matches the model search on a 100k sample of 7-vertex graphs") {
    Rng rng(20261016);
    int disagreements = 0, positives = 0;
    for (int i = 0; i < 100000; ++i) {
        // Uniform over labeled graphs: each of the 21 possible edges by a fair bit.
        const std::uint64_t bits = rng.next();
        std::vector<Edge> es;
        int k = 0;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v, ++k)
                if (bits >> k & 1u) es.emplace_back(u, v);
        const Graph g = Graph::from_edges(7, es);
        const auto r = detect_k23_induced_minor(g);
        const bool truth = find_k23_model(g).has_value();
        if (r.contains_k23 != truth || truth == k23_free_by_separators(g)) ++disagreements;
        if (r.contains_k23) {
            ++positives;
            if (!r.witness || !validate_witness(g, *r.witness) || !r.model || !is_valid_model(g, *r.model))
                ++disagreements;
        }
    }
    CHECK(disagreements == 0);
    CHECK(positives > 1000);
}
