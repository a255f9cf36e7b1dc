#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truemper/patterns.hpp"
#include "truemper/stm.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

using namespace truemper;

namespace {

struct Induced {
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> adj;
};

Induced restrict(const Graph& g, const VertexSet& s) {
    Induced h;
    h.vs = s.to_vector();
    for (Vertex u : h.vs) {
        auto& list = h.adj[u];
        for (Vertex v : h.vs)
            if (g.adjacent(u, v)) list.push_back(v);
    }
    return h;
}

bool connected(const Induced& h, Vertex skip = -1) {
    std::vector<Vertex> start;
    for (Vertex v : h.vs)
        if (v != skip) start.push_back(v);
    if (start.empty()) return true;
    std::set<Vertex> seen{start.front()};
    std::vector<Vertex> stack{start.front()};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : h.adj.at(u))
            if (w != skip && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == start.size();
}

int deg(const Induced& h, Vertex v, Vertex skip = -1) {
    return static_cast<int>(std::count_if(h.adj.at(v).begin(), h.adj.at(v).end(), [&](Vertex w) { return w != skip; }));
}

/// Which of S, T, M the induced subgraph on `s` belongs to with extremities
/// exactly I, computed from degrees and counts only.
std::optional<StmClass> classify(const Graph& g, const VertexSet& s, const std::array<Vertex, 3>& I) {
    const Induced h = restrict(g, s);
    if (!connected(h)) return std::nullopt;
    for (Vertex x : I)
        if (!s.contains(x)) return std::nullopt;
    std::size_t edges = 0;
    for (Vertex v : h.vs) edges += h.adj.at(v).size();
    edges /= 2;
    const auto is_extremity = [&](Vertex v) { return std::find(I.begin(), I.end(), v) != I.end(); };

    // S: a tree whose leaves are I with one branch vertex of degree 3.
    if (edges + 1 == h.vs.size()) {
        int branch = 0;
        bool ok = true;
        for (Vertex v : h.vs) {
            const int d = deg(h, v);
            if (is_extremity(v)) ok = ok && d == 1;
            else if (d == 3) ++branch;
            else ok = ok && d == 2;
        }
        if (ok && branch == 1) return StmClass::S;
    }
    // T: unicyclic, the cycle is a triangle on the three degree-3 vertices.
    if (edges == h.vs.size()) {
        std::vector<Vertex> branch;
        bool ok = true;
        for (Vertex v : h.vs) {
            const int d = deg(h, v);
            if (is_extremity(v)) ok = ok && d == 1;
            else if (d == 3) branch.push_back(v);
            else ok = ok && d == 2;
        }
        if (ok && branch.size() == 3 && g.adjacent(branch[0], branch[1]) && g.adjacent(branch[1], branch[2]) &&
            g.adjacent(branch[0], branch[2]))
            return StmClass::T;
    }
    // M: removing one extremity leaves a path between the other two; the
    // removed one sees at least two interior vertices and no end.
    for (int c = 0; c < 3; ++c) {
        const Vertex center = I[static_cast<std::size_t>(c)];
        const Vertex e1 = I[static_cast<std::size_t>((c + 1) % 3)];
        const Vertex e2 = I[static_cast<std::size_t>((c + 2) % 3)];
        if (!connected(h, center)) continue;
        std::size_t rest_edges = edges - h.adj.at(center).size();
        if (rest_edges + 2 != h.vs.size()) continue;
        bool ok = deg(h, e1, center) == 1 && deg(h, e2, center) == 1;
        for (Vertex v : h.vs)
            if (v != center && v != e1 && v != e2) ok = ok && deg(h, v, center) == 2;
        ok = ok && !g.adjacent(center, e1) && !g.adjacent(center, e2) && h.adj.at(center).size() >= 2;
        if (ok) return StmClass::M;
    }
    return std::nullopt;
}

struct Instance {
    Graph g;
    std::array<Vertex, 3> I;
    VertexSet C;
};

/// Random graph, random independent triple, and a component of g \ I that
/// sees all three; nullopt when the draw has no such component.
std::optional<Instance> random_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 5 + rng.below(10);
    const double p = 0.15 + 0.5 * rng.uniform();
    Graph g = random_graph(n, p, rng.next());
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::array<Vertex, 3> I{rng.below(n), rng.below(n), rng.below(n)};
        if (I[0] == I[1] || I[1] == I[2] || I[0] == I[2]) continue;
        if (g.adjacent(I[0], I[1]) || g.adjacent(I[1], I[2]) || g.adjacent(I[0], I[2])) continue;
        const VertexSet rest = g.all_vertices() - VertexSet(n, {I[0], I[1], I[2]});
        for (const auto& c : components(g, rest)) {
            const VertexSet nc = g.open_neighborhood(c);
            if (nc.contains(I[0]) && nc.contains(I[1]) && nc.contains(I[2])) return Instance{g, I, c};
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("claw gives S with the center as apex") {
    // Center 0, leaves 1,2,3.
    const std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}};
    const Graph g = Graph::from_edges(4, es);
    const auto h = extract_stm(g, {1, 2, 3}, VertexSet(4, {0}));
    CHECK(h.kind == StmClass::S);
    CHECK(h.apex == 0);
    CHECK(h.extremities == std::array<Vertex, 3>{1, 2, 3});
    CHECK(stm_violation(g, h) == "");
    for (int i = 0; i < 3; ++i) CHECK(h.legs[static_cast<std::size_t>(i)] == Path{0, i + 1});
}

TEST_CASE("net gives T with its triangle") {
    const Graph g = make_named("net").graph;  // a1,a2,a3 = 0,1,2; v1,v2,v3 = 3,4,5
    const auto h = extract_stm(g, {0, 1, 2}, VertexSet(6, {3, 4, 5}));
    CHECK(h.kind == StmClass::T);
    CHECK(h.triangle == std::array<Vertex, 3>{3, 4, 5});
    CHECK(h.vertices == g.all_vertices());
    CHECK(stm_violation(g, h) == "");
}

TEST_CASE("path with a third extremity seeing two interior vertices gives M") {
    // a1=0, m1=1, m2=2, a2=3, a3=4.
    const std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}};
    const Graph g = Graph::from_edges(5, es);
    const auto h = extract_stm(g, {0, 3, 4}, VertexSet(5, {1, 2}));
    CHECK(h.kind == StmClass::M);
    CHECK(h.center == 4);
    CHECK(h.spine == Path{0, 1, 2, 3});
    CHECK(stm_violation(g, h) == "");
    // Listing the extremities in another order does not change the answer.
    const auto h2 = extract_stm(g, {4, 0, 3}, VertexSet(5, {1, 2}));
    CHECK(h2.kind == StmClass::M);
    CHECK(h2.center == 4);
    CHECK(h2.extremities == std::array<Vertex, 3>{4, 0, 3});
}

TEST_CASE("precondition violations are rejected") {
    const std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}};
    const Graph g = Graph::from_edges(5, es);
    // 1 and 2 adjacent.
    CHECK_THROWS_AS(extract_stm(g, {1, 2, 3}, VertexSet(5, {0})), std::invalid_argument);
    // Repeated vertex.
    CHECK_THROWS_AS(extract_stm(g, {1, 1, 3}, VertexSet(5, {0})), std::invalid_argument);
    // C not connected to all of I.
    CHECK_THROWS_AS(extract_stm(g, {1, 3, 4}, VertexSet(5, {0})), std::invalid_argument);
    // C not a whole component.
    const Graph claw_tail = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 4}, {4, 3}});
    CHECK_THROWS_AS(extract_stm(claw_tail, {1, 2, 3}, VertexSet(5, {0})), std::invalid_argument);
    // C meets I.
    CHECK_THROWS_AS(extract_stm(claw_tail, {1, 2, 3}, VertexSet(5, {0, 4, 3})), std::invalid_argument);
}

TEST_CASE("the checker rejects a mislabelled result") {
    const Graph g = make_named("net").graph;
    auto h = extract_stm(g, {0, 1, 2}, VertexSet(6, {3, 4, 5}));
    auto bad = h;
    bad.kind = StmClass::S;
    CHECK(stm_violation(g, bad) != "");
    bad = h;
    bad.vertices.erase(5);
    CHECK(stm_violation(g, bad) != "");
    bad = h;
    std::swap(bad.extremities[0], bad.extremities[1]);
    CHECK(stm_violation(g, bad) != "");
}

TEST_CASE("random instances yield an S, T or M graph with extremities I within n steps") {
    int done = 0;
    std::map<StmClass, int> seen;
    for (std::uint64_t seed = 1; done < 1000; ++seed) {
        auto inst = random_instance(seed);
        if (!inst) continue;
        ++done;
        ExtractStats stats;
        const auto h = extract_stm(inst->g, inst->I, inst->C, &stats);
        CAPTURE(seed);
        CHECK(stm_violation(inst->g, h) == "");
        CHECK(h.extremities == inst->I);
        CHECK(h.vertices.is_subset_of(inst->C | VertexSet(inst->g.order(), {inst->I[0], inst->I[1], inst->I[2]})));
        const auto cls = classify(inst->g, h.vertices, inst->I);
        REQUIRE(cls);
        CHECK(*cls == h.kind);
        if (h.kind == StmClass::M) CHECK(std::find(inst->I.begin(), inst->I.end(), h.center) != inst->I.end());
        CHECK(stats.iterations <= inst->g.order());
        ++seen[h.kind];
        // Same input, same output.
        const auto again = extract_stm(inst->g, inst->I, inst->C);
        CHECK(again.vertices == h.vertices);
    }
    CHECK(seen[StmClass::S] > 0);
    CHECK(seen[StmClass::T] > 0);
    CHECK(seen[StmClass::M] > 0);
}

TEST_CASE("larger sparse instances reach several rewrite steps") {
    Rng rng(5);
    int total = 0, max_iterations = 0;
    while (total < 30000) {
        const int n = 8 + rng.below(40);
        const Graph g = random_graph(n, (1.0 + 2.5 * rng.uniform()) / n, rng.next());
        std::array<Vertex, 3> I{rng.below(n), rng.below(n), rng.below(n)};
        if (I[0] == I[1] || I[1] == I[2] || I[0] == I[2]) continue;
        if (g.adjacent(I[0], I[1]) || g.adjacent(I[1], I[2]) || g.adjacent(I[0], I[2])) continue;
        const VertexSet triple(n, {I[0], I[1], I[2]});
        std::optional<VertexSet> C;
        for (const auto& c : components(g, g.all_vertices() - triple))
            if (triple.is_subset_of(g.open_neighborhood(c))) C = c;
        if (!C) continue;
        ++total;
        ExtractStats stats;
        const auto h = extract_stm(g, I, *C, &stats);
        REQUIRE(stm_violation(g, h) == "");
        REQUIRE(classify(g, h.vertices, I) == h.kind);
        REQUIRE(stats.iterations <= n);
        max_iterations = std::max(max_iterations, stats.iterations);
    }
    CHECK(max_iterations >= 3);
}
