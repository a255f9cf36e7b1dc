#include "truemper/detectors.hpp"

#include "truemper/frame.hpp"
#include "truemper/oracle.hpp"
#include "truemper/stm.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <type_traits>
#include <set>
#include <thread>

namespace truemper {

namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

void add_edge(EdgeSet& e, Vertex u, Vertex v) { e.emplace(std::min(u, v), std::max(u, v)); }

/// Compares g[vertices] against the expected edge set.
std::string induced_mismatch(const Graph& g, const std::vector<Vertex>& vertices, const EdgeSet& expected) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const Vertex u = std::min(vertices[i], vertices[j]);
            const Vertex v = std::max(vertices[i], vertices[j]);
            const bool want = expected.contains({u, v});
            if (g.adjacent(u, v) != want)
                return (want ? "missing edge " : "unexpected edge ") + std::to_string(u) + "-" + std::to_string(v);
        }
    return "";
}

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.order(); }

/// Checks three paths src[i] -> dst[i] with pairwise disjoint interiors that
/// avoid all endpoints; adds their edges and vertices.
std::string check_paths(const Graph& g, const std::array<Path, 3>& paths, const std::array<Vertex, 3>& src,
                        const std::array<Vertex, 3>& dst, EdgeSet& edges, std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < 3; ++i) {
        const Path& p = paths[i];
        if (p.size() < 2 || p.front() != src[i] || p.back() != dst[i])
            return "path " + std::to_string(i) + " has wrong endpoints";
        for (Vertex v : p)
            if (!in_range(g, v)) return "vertex out of range";
        for (std::size_t k = 0; k + 1 < p.size(); ++k) add_edge(edges, p[k], p[k + 1]);
        vertices.insert(vertices.end(), p.begin(), p.end());
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::size_t expected = 0;
    std::set<Vertex> ends(src.begin(), src.end());
    ends.insert(dst.begin(), dst.end());
    expected = ends.size();
    for (const Path& p : paths) expected += p.size() - 2;
    if (vertices.size() != expected) return "paths are not internally disjoint";
    return "";
}

std::string violation(const Graph& g, const Theta& t) {
    if (!in_range(g, t.hub1) || !in_range(g, t.hub2) || t.hub1 == t.hub2) return "theta: bad hubs";
    EdgeSet edges;
    std::vector<Vertex> vertices;
    const std::array<Vertex, 3> s{t.hub1, t.hub1, t.hub1}, d{t.hub2, t.hub2, t.hub2};
    if (auto e = check_paths(g, t.paths, s, d, edges, vertices); !e.empty()) return "theta: " + e;
    for (const Path& p : t.paths)
        if (p.size() < 3) return "theta: path of length less than 2";
    if (auto e = induced_mismatch(g, vertices, edges); !e.empty()) return "theta: " + e;
    return "";
}

std::string violation(const Graph& g, const Pyramid& p) {
    const auto& t = p.triangle;
    if (!in_range(g, p.apex)) return "pyramid: bad apex";
    for (Vertex v : t)
        if (!in_range(g, v) || v == p.apex) return "pyramid: bad triangle";
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return "pyramid: bad triangle";
    EdgeSet edges;
    std::vector<Vertex> vertices;
    if (auto e = check_paths(g, p.paths, {p.apex, p.apex, p.apex}, t, edges, vertices); !e.empty()) return "pyramid: " + e;
    int long_paths = 0;
    for (const Path& q : p.paths) long_paths += q.size() >= 3 ? 1 : 0;
    if (long_paths < 2) return "pyramid: fewer than two paths of length at least 2";
    add_edge(edges, t[0], t[1]);
    add_edge(edges, t[1], t[2]);
    add_edge(edges, t[0], t[2]);
    if (auto e = induced_mismatch(g, vertices, edges); !e.empty()) return "pyramid: " + e;
    return "";
}

std::string violation(const Graph& g, const LongPrism& p) {
    std::set<Vertex> corners;
    for (const auto* tri : {&p.top, &p.bottom})
        for (Vertex v : *tri) {
            if (!in_range(g, v)) return "long prism: bad triangle";
            corners.insert(v);
        }
    if (corners.size() != 6) return "long prism: triangles are not disjoint";
    EdgeSet edges;
    std::vector<Vertex> vertices;
    if (auto e = check_paths(g, p.paths, p.top, p.bottom, edges, vertices); !e.empty()) return "long prism: " + e;
    if (std::none_of(p.paths.begin(), p.paths.end(), [](const Path& q) { return q.size() >= 3; }))
        return "long prism: every path has length 1";
    for (const auto* tri : {&p.top, &p.bottom}) {
        add_edge(edges, (*tri)[0], (*tri)[1]);
        add_edge(edges, (*tri)[1], (*tri)[2]);
        add_edge(edges, (*tri)[0], (*tri)[2]);
    }
    if (auto e = induced_mismatch(g, vertices, edges); !e.empty()) return "long prism: " + e;
    return "";
}

std::string violation(const Graph& g, const BrokenWheel& w) {
    if (!in_range(g, w.center)) return "broken wheel: bad center";
    for (Vertex v : w.rim)
        if (!in_range(g, v)) return "broken wheel: rim vertex out of range";
    if (!is_hole(g, w.rim)) return "broken wheel: rim is not a hole";
    if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return "broken wheel: center lies on the rim";
    const auto sectors = sector_lengths(g, w);
    if (sectors.size() < 3) return "broken wheel: center has fewer than three rim neighbours";
    if (std::count_if(sectors.begin(), sectors.end(), [](int s) { return s >= 2; }) < 2)
        return "broken wheel: fewer than two sectors of length at least 2";
    return "";
}

// ---------------------------------------------------------------- long prism

/// Shortest a1-a2 path through X closes a co-domino into a long prism.
std::optional<Witness> codomino_step(const Graph& g) {
    const int n = g.order();
    for (Vertex v1 = 0; v1 < n; ++v1)
        for (Vertex v2 : g.neighbors(v1)) {
            if (v2 <= v1) continue;
            for (Vertex v4 : g.neighbors(v1)) {
                if (v4 <= v2 || g.adjacent(v2, v4)) continue;
                for (Vertex v3 : g.neighbors(v2) & g.neighbors(v4)) {
                    if (v3 <= v1 || g.adjacent(v1, v3)) continue;
                    const std::array<Vertex, 4> cyc{v1, v2, v3, v4};
                    const VertexSet removed =
                        g.neighbors(v1) | g.neighbors(v2) | g.neighbors(v3) | g.neighbors(v4);
                    std::vector<VertexSet> comps;
                    bool comps_ready = false;
                    for (int shift = 0; shift < 2; ++shift) {
                        // Square w1 w2 w3 w4 with triangles on w1w2 and w3w4.
                        const Vertex w1 = cyc[static_cast<std::size_t>(shift)];
                        const Vertex w2 = cyc[static_cast<std::size_t>(shift + 1)];
                        const Vertex w3 = cyc[static_cast<std::size_t>((shift + 2) % 4)];
                        const Vertex w4 = cyc[static_cast<std::size_t>((shift + 3) % 4)];
                        const VertexSet side1 = (g.neighbors(w1) & g.neighbors(w2)) - g.neighbors(w3) - g.neighbors(w4);
                        const VertexSet side2 = (g.neighbors(w3) & g.neighbors(w4)) - g.neighbors(w1) - g.neighbors(w2);
                        if (side1.empty() || side2.empty()) continue;
                        if (!comps_ready) {
                            comps = components(g, removed.complement());
                            comps_ready = true;
                        }
                        for (const VertexSet& X : comps) {
                            const VertexSet touching = g.open_neighborhood(X);
                            for (Vertex a1 : side1 & touching)
                                for (Vertex a2 : side2 & touching) {
                                    if (g.adjacent(a1, a2)) continue;
                                    auto path = shortest_path_through(g, a1, a2, X);
                                    if (!path) continue;
                                    return LongPrism{{a1, w1, w2}, {a2, w4, w3}, {*path, Path{w1, w4}, Path{w2, w3}}};
                                }
                        }
                    }
                }
            }
        }
    return std::nullopt;
}


Path append(Path p, Vertex v) {
    p.push_back(v);
    return p;
}

Path prepend(Vertex v, const Path& p) {
    Path out{v};
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Turns the S/T/M subgraph found between a net's pendants a[i] into a long
/// prism, or throws with the pyramid it reveals. v[i] is the triangle vertex
/// carrying pendant a[i].
Witness assemble_from_net(const Graph& g, const STMGraph& h, const std::array<Vertex, 3>& v,
                          const std::array<Vertex, 3>& a) {
    auto triangle_of = [&](Vertex pendant) {
        return v[static_cast<std::size_t>(std::find(a.begin(), a.end(), pendant) - a.begin())];
    };
    std::array<Path, 3> paths;
    switch (h.kind) {
        case StmClass::T:
            for (std::size_t i = 0; i < 3; ++i) paths[i] = append(h.legs[i], v[i]);
            return LongPrism{h.triangle, v, paths};
        case StmClass::S:
            for (std::size_t i = 0; i < 3; ++i) paths[i] = append(h.legs[i], v[i]);
            throw PreconditionViolated("precondition violated: pyramid present", Pyramid{h.apex, v, paths});
        case StmClass::M: break;
    }
    const Path& spine = h.spine;
    std::size_t first = spine.size(), last = 0;
    for (std::size_t i = 0; i < spine.size(); ++i)
        if (g.adjacent(h.center, spine[i])) {
            first = std::min(first, i);
            last = std::max(last, i);
        }
    Path to_front(spine.begin(), spine.begin() + static_cast<std::ptrdiff_t>(first) + 1);
    std::reverse(to_front.begin(), to_front.end());
    to_front.push_back(triangle_of(spine.front()));
    Path to_back(spine.begin() + static_cast<std::ptrdiff_t>(last), spine.end());
    to_back.push_back(triangle_of(spine.back()));
    const std::array<Vertex, 3> bottom{triangle_of(h.center), triangle_of(spine.front()), triangle_of(spine.back())};
    const Vertex c1 = spine[first];
    const Vertex c2 = spine[last];
    if (g.adjacent(c1, c2))
        return LongPrism{{h.center, c1, c2}, bottom, {Path{h.center, bottom[0]}, to_front, to_back}};
    throw PreconditionViolated(
        "precondition violated: pyramid present",
        Pyramid{h.center, bottom, {Path{h.center, bottom[0]}, prepend(h.center, to_front), prepend(h.center, to_back)}});
}

std::optional<Witness> net_step(const Graph& g) {
    const int n = g.order();
    for (Vertex v1 = 0; v1 < n; ++v1)
        for (Vertex v2 : g.neighbors(v1)) {
            if (v2 <= v1) continue;
            for (Vertex v3 : g.neighbors(v1) & g.neighbors(v2)) {
                if (v3 <= v2) continue;
                const std::array<Vertex, 3> v{v1, v2, v3};
                std::array<VertexSet, 3> pendants;
                bool all = true;
                for (std::size_t i = 0; i < 3; ++i) {
                    pendants[i] = g.neighbors(v[i]) - g.neighbors(v[(i + 1) % 3]) - g.neighbors(v[(i + 2) % 3]);
                    pendants[i].erase(v[(i + 1) % 3]);
                    pendants[i].erase(v[(i + 2) % 3]);
                    all = all && !pendants[i].empty();
                }
                if (!all) continue;
                const VertexSet removed = g.neighbors(v1) | g.neighbors(v2) | g.neighbors(v3);
                for (const VertexSet& X : components(g, removed.complement())) {
                    const VertexSet touching = g.open_neighborhood(X);
                    for (Vertex a1 : pendants[0] & touching)
                        for (Vertex a2 : pendants[1] & touching) {
                            if (g.adjacent(a1, a2)) continue;
                            for (Vertex a3 : pendants[2] & touching) {
                                if (g.adjacent(a1, a3) || g.adjacent(a2, a3)) continue;
                                const std::array<Vertex, 3> a{a1, a2, a3};
                                VertexSet keep = X;
                                for (Vertex p : a) keep.insert(p);
                                const InducedSubgraph sub = g.induced(keep);
                                std::array<Vertex, 3> local{};
                                for (std::size_t i = 0; i < 3; ++i)
                                    local[i] = sub.from_parent[static_cast<std::size_t>(a[i])];
                                VertexSet local_x(sub.graph.order());
                                for (Vertex x : X) local_x.insert(sub.from_parent[static_cast<std::size_t>(x)]);
                                STMGraph h = extract_stm(sub.graph, local, local_x);
                                // Back to g's labels.
                                h.extremities = a;
                                h.vertices = sub.lift(h.vertices, n);
                                if (h.apex >= 0) h.apex = sub.to_parent[static_cast<std::size_t>(h.apex)];
                                if (h.center >= 0) h.center = sub.to_parent[static_cast<std::size_t>(h.center)];
                                for (Vertex& t : h.triangle)
                                    if (t >= 0) t = sub.to_parent[static_cast<std::size_t>(t)];
                                for (Path& leg : h.legs) leg = sub.lift(leg);
                                h.spine = sub.lift(h.spine);
                                return assemble_from_net(g, h, v, a);
                            }
                        }
                }
            }
        }
    return std::nullopt;
}

// -------------------------------------------------------------- broken wheel

/// Smallest broken wheel on 6 or 7 vertices, by size then sorted vertex list.
std::optional<BrokenWheel> small_wheel(const Graph& g) {
    for (int rim_len : {5, 6}) {
        std::optional<std::vector<Vertex>> best;
        for_each_hole(g, g.all_vertices(), rim_len, rim_len, [&](const std::vector<Vertex>& rim) {
            const VertexSet on_rim = VertexSet::from_range(g.order(), rim);
            for (Vertex x = 0; x < g.order(); ++x) {
                if (on_rim.contains(x) || g.neighbors(x).count_common(on_rim) < 3) continue;
                auto w = broken_wheel_centered_at(g, on_rim | VertexSet(g.order(), {x}), x);
                if (!w) continue;
                std::vector<Vertex> members = rim;
                members.push_back(x);
                std::sort(members.begin(), members.end());
                if (!best || members < *best) best = members;
            }
            return false;
        });
        if (best) return is_broken_wheel(g, VertexSet::from_range(g.order(), *best));
    }
    return std::nullopt;
}

std::optional<BrokenWheel> frame_search(const Graph& g, Vertex x) {
    std::optional<BrokenWheel> found;
    for_each_frame(g, x, [&](const Frame& f) {
        VertexSet s = g.empty_set();
        for (Vertex v : {f.x, f.a, f.b, f.c, f.d, f.a_plus, f.b_plus, f.c_plus, f.d_plus, f.a_minus, f.b_minus,
                         f.c_minus, f.d_minus})
            s.insert(v);
        for (const Path& p : connect_frame(g, f))
            for (Vertex v : p) s.insert(v);
        found = broken_wheel_centered_at(g, s, x);
        return found.has_value();
    });
    return found;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TRUEMPER_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<unsigned>(value);
    }
    return 1;
}

/// Frame search sharded by center. The wheel for the smallest successful
/// center wins, so the answer does not depend on the thread count.
std::optional<BrokenWheel> sharded_frame_search(const Graph& g, unsigned threads) {
    const int n = g.order();
    if (threads <= 1 || n < 2) {
        for (Vertex x = 0; x < n; ++x)
            if (auto w = frame_search(g, x)) return w;
        return std::nullopt;
    }
    std::atomic<int> next{0};
    std::atomic<int> best{n};
    std::vector<std::optional<BrokenWheel>> results(static_cast<std::size_t>(n));
    auto worker = [&] {
        while (true) {
            const int x = next.fetch_add(1);
            if (x >= n || x >= best.load()) return;
            if (auto w = frame_search(g, x)) {
                results[static_cast<std::size_t>(x)] = std::move(w);
                int current = best.load();
                while (x < current && !best.compare_exchange_weak(current, x)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    const int winner = best.load();
    if (winner < n) return results[static_cast<std::size_t>(winner)];
    return std::nullopt;
}

/// Rim positions from `from` to `to` walking clockwise, inclusive.
VertexSet arc(const Graph& g, const std::vector<Vertex>& rim, std::size_t from, std::size_t to) {
    VertexSet s = g.empty_set();
    for (std::size_t i = from;; i = (i + 1) % rim.size()) {
        s.insert(rim[i]);
        if (i == to) break;
    }
    return s;
}

VertexSet set_of(const Graph& g, const Path& p, std::size_t drop_front, std::size_t drop_back) {
    VertexSet s = g.empty_set();
    for (std::size_t i = drop_front; i + drop_back < p.size(); ++i) s.insert(p[i]);
    return s;
}

InducedMinorModel build_model(const Graph& g, const Witness& w) {
    return std::visit(
        [&](const auto& c) -> InducedMinorModel {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Theta>) {
                return {VertexSet(g.order(), {c.hub1}), VertexSet(g.order(), {c.hub2}), set_of(g, c.paths[0], 1, 1),
                        set_of(g, c.paths[1], 1, 1), set_of(g, c.paths[2], 1, 1)};
            } else if constexpr (std::is_same_v<T, Pyramid>) {
                // Put the two long paths first.
                std::array<std::size_t, 3> idx{0, 1, 2};
                std::stable_partition(idx.begin(), idx.end(), [&](std::size_t i) { return c.paths[i].size() >= 3; });
                const Path& p1 = c.paths[idx[0]];
                const Path& p2 = c.paths[idx[1]];
                const Path& p3 = c.paths[idx[2]];
                return {VertexSet(g.order(), {c.apex}), VertexSet(g.order(), {c.triangle[idx[0]], c.triangle[idx[1]]}),
                        set_of(g, p1, 1, 1), set_of(g, p2, 1, 1), set_of(g, p3, 1, 0)};
            } else if constexpr (std::is_same_v<T, LongPrism>) {
                std::size_t k = 0;
                while (c.paths[k].size() < 3) ++k;
                const std::size_t k2 = (k + 1) % 3, k3 = (k + 2) % 3;
                VertexSet u = set_of(g, c.paths[k2], 0, 1);
                u.insert(c.top[k]);
                VertexSet v = set_of(g, c.paths[k3], 1, 0);
                v.insert(c.bottom[k]);
                return {u, v, set_of(g, c.paths[k], 1, 1), VertexSet(g.order(), {c.top[k3]}),
                        VertexSet(g.order(), {c.bottom[k2]})};
            } else {
                const auto& rim = c.rim;
                std::vector<std::size_t> spokes;
                for (std::size_t i = 0; i < rim.size(); ++i)
                    if (g.adjacent(c.center, rim[i])) spokes.push_back(i);
                auto end_of = [&](std::size_t s) { return spokes[(s + 1) % spokes.size()]; };
                auto length = [&](std::size_t s) { return (end_of(s) + rim.size() - spokes[s]) % rim.size(); };
                std::size_t p = 0;
                while (length(p) < 2) ++p;
                std::size_t r = (p + 1) % spokes.size();
                while (length(r) < 2) r = (r + 1) % spokes.size();
                const std::size_t a = spokes[p], b = end_of(p), cc = spokes[r], d = end_of(r);
                VertexSet mid_p = g.empty_set(), mid_r = g.empty_set();
                for (std::size_t i = (a + 1) % rim.size(); i != b; i = (i + 1) % rim.size()) mid_p.insert(rim[i]);
                for (std::size_t i = (cc + 1) % rim.size(); i != d; i = (i + 1) % rim.size()) mid_r.insert(rim[i]);
                return {arc(g, rim, d, a), arc(g, rim, b, cc), VertexSet(g.order(), {c.center}), mid_p, mid_r};
            }
        },
        w);
}

}  // namespace

std::string witness_violation(const Graph& g, const Witness& w) {
    return std::visit([&](const auto& c) { return violation(g, c); }, w);
}

std::optional<Witness> detect_pyramid(const Graph& g) { return find_config_exhaustive(g, SearchTarget::Pyramid); }

std::optional<Witness> detect_theta(const Graph& g) { return find_config_exhaustive(g, SearchTarget::Theta); }

std::optional<Witness> detect_long_prism(const Graph& g) {
    if (auto w = codomino_step(g)) return w;
    return net_step(g);
}

std::optional<Witness> detect_broken_wheel(const Graph& g, const BrokenWheelOptions& options) {
    if (auto w = small_wheel(g)) return Witness{*w};
    if (auto w = sharded_frame_search(g, resolve_threads(options.threads))) return Witness{*w};
    return std::nullopt;
}

std::optional<BrokenWheel> broken_wheel_centered_at(const Graph& g, const VertexSet& s, Vertex x) {
    if (!s.contains(x)) return std::nullopt;
    VertexSet rest = s;
    rest.erase(x);
    const int k = rest.count();
    if (k < 4) return std::nullopt;
    for (Vertex v : rest)
        if (g.neighbors(v).count_common(rest) != 2) return std::nullopt;
    if (!is_connected(g, rest)) return std::nullopt;

    const Vertex start = rest.first();
    const VertexSet around = g.neighbors(start) & rest;
    std::vector<Vertex> rim{start};
    Vertex prev = start;
    Vertex cur = around.first();
    while (cur != start) {
        rim.push_back(cur);
        const VertexSet next = (g.neighbors(cur) & rest) - VertexSet(g.order(), {prev});
        prev = cur;
        cur = next.first();
    }
    BrokenWheel w{std::move(rim), x};
    if (!violation(g, w).empty()) return std::nullopt;
    return w;
}

std::optional<BrokenWheel> is_broken_wheel(const Graph& g, const VertexSet& s) {
    for (Vertex x : s)
        if (auto w = broken_wheel_centered_at(g, s, x)) return w;
    return std::nullopt;
}

InducedMinorModel witness_to_model(const Graph& g, const Witness& w) {
    if (auto err = witness_violation(g, w); !err.empty())
        throw std::invalid_argument("witness_to_model: invalid witness: " + err);
    InducedMinorModel m = build_model(g, w);
    if (auto err = model_violation(g, m); !err.empty())
        throw std::logic_error("witness_to_model: model checker rejected the " + std::string(to_string(kind_of(w))) +
                               " model: " + err);
    return m;
}

std::string_view to_string(Stage stage) {
    switch (stage) {
        case Stage::Pyramid: return "pyramid";
        case Stage::Theta: return "theta";
        case Stage::LongPrism: return "long-prism";
        case Stage::BrokenWheel: return "broken-wheel";
    }
    return "?";
}

DetectionResult detect_k23_induced_minor(const Graph& g, const DetectOptions& options) {
    DetectionResult result;
    auto run = [&](Stage stage) -> std::optional<Witness> {
        const auto t0 = std::chrono::steady_clock::now();
        std::optional<Witness> w;
        switch (stage) {
            case Stage::Pyramid: w = detect_pyramid(g); break;
            case Stage::Theta: w = detect_theta(g); break;
            case Stage::LongPrism: w = detect_long_prism(g); break;
            case Stage::BrokenWheel: w = detect_broken_wheel(g, BrokenWheelOptions{options.threads}); break;
        }
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        result.timings.push_back({stage, dt.count()});
        return w;
    };

    std::vector<Stage> stages{Stage::Pyramid, Stage::Theta, Stage::LongPrism, Stage::BrokenWheel};
    if (options.only_stage) stages.erase(std::find(stages.begin(), stages.end(), *options.only_stage) + 1, stages.end());
    for (Stage stage : stages) {
        std::optional<Witness> w;
        try {
            w = run(stage);
        } catch (const PreconditionViolated& e) {
            throw std::logic_error(std::string("cascade broke its own precondition: ") + e.what());
        }
        if (!w) continue;
        if (auto err = witness_violation(g, *w); !err.empty())
            throw std::logic_error("detector produced an invalid witness: " + err);
        result.contains_k23 = true;
        result.stage = stage;
        result.model = witness_to_model(g, *w);
        result.witness = std::move(w);
        result.precondition_violated = options.only_stage && stage != *options.only_stage;
        return result;
    }
    return result;
}

}  // namespace truemper
