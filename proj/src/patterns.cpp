#include "truemper/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace truemper {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::below(int bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

ConfigSpec theta_spec(int l1, int l2, int l3) { return {ConfigShape::Theta, {l1, l2, l3}}; }
ConfigSpec pyramid_spec(int l1, int l2, int l3) { return {ConfigShape::Pyramid, {l1, l2, l3}}; }
ConfigSpec prism_spec(int l1, int l2, int l3) { return {ConfigShape::Prism, {l1, l2, l3}}; }
ConfigSpec broken_wheel_spec(std::vector<int> sectors) { return {ConfigShape::BrokenWheel, std::move(sectors)}; }

std::string config_spec_violation(const ConfigSpec& spec) {
    const auto& ls = spec.lengths;
    const auto long_paths = std::count_if(ls.begin(), ls.end(), [](int l) { return l >= 2; });
    if (std::any_of(ls.begin(), ls.end(), [](int l) { return l < 1; })) return "lengths must be at least 1";
    switch (spec.shape) {
        case ConfigShape::Theta:
            if (ls.size() != 3) return "theta needs three path lengths";
            if (long_paths != 3) return "theta paths must have length at least 2";
            break;
        case ConfigShape::Pyramid:
            if (ls.size() != 3) return "pyramid needs three path lengths";
            if (long_paths < 2) return "pyramid needs two paths of length at least 2";
            break;
        case ConfigShape::Prism:
            if (ls.size() != 3) return "prism needs three path lengths";
            break;
        case ConfigShape::BrokenWheel:
            if (ls.size() < 3) return "broken wheel needs at least three sectors";
            if (long_paths < 2) return "broken wheel needs two sectors of length at least 2";
            break;
    }
    return {};
}

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::optional<int> parse_suffix(std::string_view name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
    if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
    return value;
}

}  // namespace

LabeledGraph make_named(std::string_view name) {
    if (name == "co-domino") {
        // a1 a2 v1 v2 v3 v4
        const std::vector<Edge> es{{2, 3}, {3, 4}, {4, 5}, {5, 2}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
        return {Graph::from_edges(6, es), {"a1", "a2", "v1", "v2", "v3", "v4"}};
    }
    if (name == "net") {
        // a1 a2 a3 v1 v2 v3
        const std::vector<Edge> es{{3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
        return {Graph::from_edges(6, es), {"a1", "a2", "a3", "v1", "v2", "v3"}};
    }
    if (name == "cube") {
        // v1..v6 x y
        std::vector<Edge> es;
        for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
        for (int i = 0; i < 6; i += 2) es.emplace_back(6, i);
        for (int i = 1; i < 6; i += 2) es.emplace_back(7, i);
        return {Graph::from_edges(8, es), {"v1", "v2", "v3", "v4", "v5", "v6", "x", "y"}};
    }
    if (name == "k23") {
        const std::vector<Edge> es{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
        return {Graph::from_edges(5, es), {"u", "v", "a", "b", "c"}};
    }
    if (auto n = parse_suffix(name, 'c'); n && *n >= 3) return {cycle_graph(*n), numbered_labels(*n)};
    if (auto n = parse_suffix(name, 'k'); n && *n >= 1) return {complete_graph(*n), numbered_labels(*n)};
    if (auto n = parse_suffix(name, 'p'); n && *n >= 1) return {path_graph(*n), numbered_labels(*n)};
    throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

Configuration make_config(const ConfigSpec& spec) {
    if (auto why = config_spec_violation(spec); !why.empty()) throw std::invalid_argument(why);
    const auto& ls = spec.lengths;
    std::vector<Edge> es;
    int next = 0;
    auto add_path = [&](Vertex from, Vertex to, int length) {
        Path p{from};
        for (int i = 1; i < length; ++i) p.push_back(next++);
        p.push_back(to);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) es.emplace_back(p[i], p[i + 1]);
        return p;
    };

    switch (spec.shape) {
        case ConfigShape::Theta: {
            Theta t{0, 1, {}};
            next = 2;
            for (std::size_t i = 0; i < 3; ++i) t.paths[i] = add_path(0, 1, ls[i]);
            return {Graph::from_edges(next, es), t};
        }
        case ConfigShape::Pyramid: {
            Pyramid p{0, {1, 2, 3}, {}};
            next = 4;
            es = {{1, 2}, {2, 3}, {1, 3}};
            for (std::size_t i = 0; i < 3; ++i) p.paths[i] = add_path(0, p.triangle[i], ls[i]);
            return {Graph::from_edges(next, es), p};
        }
        case ConfigShape::Prism: {
            LongPrism p{{0, 1, 2}, {3, 4, 5}, {}};
            next = 6;
            es = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
            for (std::size_t i = 0; i < 3; ++i) p.paths[i] = add_path(p.top[i], p.bottom[i], ls[i]);
            return {Graph::from_edges(next, es), p};
        }
        case ConfigShape::BrokenWheel: {
            const int rim_len = std::accumulate(ls.begin(), ls.end(), 0);
            BrokenWheel w;
            w.center = 0;
            for (int i = 0; i < rim_len; ++i) {
                w.rim.push_back(1 + i);
                es.emplace_back(1 + i, 1 + (i + 1) % rim_len);
            }
            int pos = 0;
            for (int l : ls) {
                es.emplace_back(0, 1 + pos);
                pos += l;
            }
            return {Graph::from_edges(rim_len + 1, es), w};
        }
    }
    throw std::logic_error("unreachable");
}

Graph make_gk(int k) {
    if (k < 1) throw std::invalid_argument("make_gk: k must be at least 1");
    auto a = [](int i) { return i; };
    auto b = [k](int i) { return k + i; };
    auto c = [k](int i) { return 2 * k + i; };
    auto d = [k](int i) { return 3 * k + i; };
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i < j) {
                es.emplace_back(b(i), b(j));
                es.emplace_back(c(i), c(j));
                es.emplace_back(d(i), d(j));
            }
            es.emplace_back(a(i), c(j));
            es.emplace_back(b(i), d(j));
            if (i == j) {
                es.emplace_back(a(i), b(j));
                es.emplace_back(c(i), d(j));
            } else {
                es.emplace_back(b(i), c(j));
            }
        }
    return Graph::from_edges(4 * k, es);
}

Graph plant(const ConfigSpec& spec, int background_n, double edge_prob, std::uint64_t seed) {
    if (background_n < 0) throw std::invalid_argument("plant: negative background size");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw std::invalid_argument("plant: edge probability outside [0, 1]");
    const Configuration config = make_config(spec);
    const int k = config.graph.order();
    const int n = k + background_n;
    std::vector<Edge> es = config.graph.edges();
    Rng rng(seed);
    for (int u = k; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) es.emplace_back(u, v);
    for (int u = k; u < n; ++u) {
        const Vertex anchor = rng.below(k);
        for (Vertex w : config.graph.closed_neighborhood(anchor))
            if (rng.chance(edge_prob)) es.emplace_back(u, w);
    }
    return Graph::from_edges(n, es);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative order");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: probability outside [0, 1]");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph random_chordal(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_chordal: negative order");
    Rng rng(seed);
    std::vector<VertexSet> adj;
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) {
        adj.emplace_back(n);
        if (v == 0 || rng.below(8) == 0) continue;  // occasionally start a new component
        const Vertex w = rng.below(v);
        std::vector<Vertex> clique{w};
        std::vector<Vertex> candidates = adj[static_cast<std::size_t>(w)].to_vector();
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
        for (Vertex y : candidates) {
            if (!rng.chance(0.6)) continue;
            const bool joins = std::all_of(clique.begin(), clique.end(),
                                           [&](Vertex c) { return adj[static_cast<std::size_t>(c)].contains(y); });
            if (joins) clique.push_back(y);
        }
        for (Vertex c : clique) {
            es.emplace_back(c, v);
            adj[static_cast<std::size_t>(c)].insert(v);
            adj[static_cast<std::size_t>(v)].insert(c);
        }
    }
    return Graph::from_edges(n, es);
}

}  // namespace truemper
