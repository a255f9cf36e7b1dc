#include "truemper/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace truemper {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!g.adj_[static_cast<std::size_t>(u)].contains(v)) ++g.m_;
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    return g;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    VertexSet out = s;
    for (Vertex v : s) out |= neighbors(v);
    return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& s) const { return closed_neighborhood(s) - s; }

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet out = neighbors(v);
    out.insert(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph Graph::induced(const VertexSet& s) const {
    InducedSubgraph sub;
    sub.to_parent = s.to_vector();
    sub.from_parent.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        sub.from_parent[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (Vertex u : s)
        for (Vertex v : neighbors(u))
            if (u < v && s.contains(v))
                es.emplace_back(sub.from_parent[static_cast<std::size_t>(u)],
                                sub.from_parent[static_cast<std::size_t>(v)]);
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), es);
    return sub;
}

Path InducedSubgraph::lift(const Path& p) const {
    Path out;
    out.reserve(p.size());
    for (Vertex v : p) out.push_back(to_parent[static_cast<std::size_t>(v)]);
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& s, int parent_universe) const {
    VertexSet out(parent_universe);
    for (Vertex v : s) out.insert(to_parent[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet remaining = s;
    while (!remaining.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(remaining.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(g.order());
            for (Vertex v : frontier) next |= g.neighbors(v);
            next &= remaining;
            next -= comp;
            frontier = std::move(next);
        }
        remaining -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g, const VertexSet& s) { return components(g, s).size() <= 1; }

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

namespace {

/// BFS over `allowed` from s; the path returned is the one obtained by
/// walking parents back from t, where each vertex's parent is the smallest
/// neighbour on the previous layer.
std::optional<Path> bfs_path(const Graph& g, Vertex s, Vertex t, const VertexSet& allowed) {
    if (s == t) return Path{s};
    const int n = g.order();
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    VertexSet seen(n);
    seen.insert(s);
    std::vector<Vertex> layer{s};
    while (!layer.empty()) {
        std::vector<Vertex> next;
        for (Vertex u : layer) {
            for (Vertex w : g.neighbors(u)) {
                if (seen.contains(w) || !allowed.contains(w)) continue;
                seen.insert(w);
                parent[static_cast<std::size_t>(w)] = u;
                next.push_back(w);
            }
        }
        if (seen.contains(t)) {
            Path p;
            for (Vertex v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) p.push_back(v);
            std::reverse(p.begin(), p.end());
            return p;
        }
        // Keep layers sorted so parents are assigned smallest-first.
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex s, Vertex t, const VertexSet& forbidden) {
    if (forbidden.contains(s) || forbidden.contains(t))
        throw std::invalid_argument("shortest_path_avoiding: endpoint is forbidden");
    VertexSet allowed = forbidden.complement();
    return bfs_path(g, s, t, allowed);
}

std::optional<Path> shortest_path_through(const Graph& g, Vertex s, Vertex t, const VertexSet& interior) {
    VertexSet allowed = interior;
    allowed.insert(t);
    return bfs_path(g, s, t, allowed);
}

bool is_path(const Graph& g, std::span<const Vertex> p) {
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.order() || seen.contains(p[i])) return false;
        seen.insert(p[i]);
        if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    }
    return true;
}

bool is_chordless_path(const Graph& g, std::span<const Vertex> p) {
    if (!is_path(g, p)) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) return false;
    return true;
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
    const std::size_t k = cycle.size();
    if (k < 4 || !is_path(g, cycle)) return false;
    if (!g.adjacent(cycle[k - 1], cycle[0])) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(cycle[i], cycle[j])) return false;
        }
    return true;
}

namespace {

bool extend_independent(const Graph& g, const std::vector<Vertex>& members, std::size_t from, int need,
                        std::vector<Vertex>& chosen) {
    if (need == 0) return true;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= members.size(); ++i) {
        Vertex v = members[i];
        bool ok = true;
        for (Vertex c : chosen)
            if (g.adjacent(c, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        if (extend_independent(g, members, i + 1, need - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_independent_set(const Graph& g, const VertexSet& s, int size) {
    if (size <= 0) return std::vector<Vertex>{};
    std::vector<Vertex> members = s.to_vector();
    std::vector<Vertex> chosen;
    if (size == 3) {
        // Direct triple scan.
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (g.adjacent(members[i], members[j])) continue;
                for (std::size_t k = j + 1; k < members.size(); ++k)
                    if (!g.adjacent(members[i], members[k]) && !g.adjacent(members[j], members[k]))
                        return std::vector<Vertex>{members[i], members[j], members[k]};
            }
        return std::nullopt;
    }
    if (extend_independent(g, members, 0, size, chosen)) return chosen;
    return std::nullopt;
}

bool independence_exceeds(const Graph& g, const VertexSet& s, int k) {
    if (k < 0) throw std::invalid_argument("independence_exceeds: k must be non-negative");
    return find_independent_set(g, s, k + 1).has_value();
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    // Maximum cardinality search yields a reverse perfect elimination order
    // iff g is chordal.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    VertexSet numbered(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered.contains(v) && (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered.insert(best);
        position[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!numbered.contains(w)) ++weight[static_cast<std::size_t>(w)];
    }
    // For each v, its earlier-numbered neighbours must form a clique; it is
    // enough to check they are all adjacent to the latest of them.
    for (Vertex v : order) {
        Vertex latest = -1;
        VertexSet earlier(n);
        for (Vertex w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)]) {
                earlier.insert(w);
                if (latest == -1 || position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(latest)]) latest = w;
            }
        if (latest == -1) continue;
        earlier.erase(latest);
        if (!earlier.is_subset_of(g.neighbors(latest))) return false;
    }
    return true;
}

}  // namespace truemper
