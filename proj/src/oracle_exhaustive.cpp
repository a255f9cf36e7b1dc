#include "truemper/oracle.hpp"

#include <algorithm>
#include <array>

namespace truemper {

namespace {

/// Backtracking search for three paths src[i] -> dst[i] that, together with
/// the anchors, induce exactly the union of the paths plus whatever edges
/// already join the anchors.
///
/// Every interior vertex is accepted only if its neighbours among the placed
/// vertices are exactly its predecessor (and the target, when it closes the
/// path). Anchors whose src/dst are adjacent get the one-edge path.
class ThreePathSearch {
public:
    ThreePathSearch(const Graph& g, std::array<Vertex, 3> src, std::array<Vertex, 3> dst, bool ordered_starts)
        : g_(g), src_(src), dst_(dst), ordered_starts_(ordered_starts), placed_(g.order()) {
        for (std::size_t i = 0; i < 3; ++i) {
            placed_.insert(src_[i]);
            placed_.insert(dst_[i]);
            direct_[i] = g_.adjacent(src_[i], dst_[i]);
            paths_[i] = {src_[i]};
        }
    }

    std::optional<std::array<Path, 3>> run() {
        for (std::size_t j = 0; j < 3; ++j)
            if (!direct_[j] && !reachable(src_[j], dst_[j])) return std::nullopt;
        if (solve(0)) return paths_;
        return std::nullopt;
    }

private:
    bool solve(std::size_t i) {
        if (i == 3) return true;
        if (direct_[i]) {
            paths_[i] = {src_[i], dst_[i]};
            return solve(i + 1);
        }
        return extend(i, src_[i]);
    }

    bool extend(std::size_t i, Vertex tail) {
        Path& path = paths_[i];
        for (Vertex v : g_.neighbors(tail) - placed_) {
            if (ordered_starts_ && path.size() == 1 && i > 0 && v <= paths_[i - 1][1]) continue;
            VertexSet contacts = g_.neighbors(v) & placed_;
            contacts.erase(tail);
            const bool closes = contacts.contains(dst_[i]);
            contacts.erase(dst_[i]);
            if (!contacts.empty()) continue;

            placed_.insert(v);
            path.push_back(v);
            bool found = false;
            if (closes) {
                path.push_back(dst_[i]);
                found = solve(i + 1);
                if (!found) path.pop_back();
            } else if (future_feasible(i, v)) {
                found = extend(i, v);
            }
            if (found) return true;
            path.pop_back();
            placed_.erase(v);
        }
        return false;
    }

    /// Necessary condition: the current path and every later one can still
    /// be completed through vertices that see no placed vertex other than
    /// their own path's tail and target.
    bool future_feasible(std::size_t i, Vertex tail) const {
        if (!reachable(tail, dst_[i])) return false;
        for (std::size_t j = i + 1; j < 3; ++j)
            if (!direct_[j] && !reachable(src_[j], dst_[j])) return false;
        return true;
    }

    bool reachable(Vertex from, Vertex to) const {
        VertexSet blockers = placed_;
        blockers.erase(from);
        blockers.erase(to);
        VertexSet allowed = (g_.open_neighborhood(blockers) | placed_).complement();
        VertexSet seen(g_.order());
        VertexSet frontier = g_.neighbors(from) & allowed;
        while (!frontier.empty()) {
            if (frontier.intersects(g_.neighbors(to))) return true;
            seen |= frontier;
            VertexSet next(g_.order());
            for (Vertex w : frontier) next |= g_.neighbors(w);
            next &= allowed;
            next -= seen;
            frontier = std::move(next);
        }
        return false;
    }

    const Graph& g_;
    std::array<Vertex, 3> src_, dst_;
    bool ordered_starts_;
    VertexSet placed_;
    std::array<bool, 3> direct_{};
    std::array<Path, 3> paths_;
};

std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y : g.neighbors(x)) {
            if (y <= x) continue;
            for (Vertex z : g.neighbors(x) & g.neighbors(y))
                if (z > y) out.push_back({x, y, z});
        }
    return out;
}

std::optional<Witness> search_theta(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        if (g.degree(a) < 3) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b) || g.degree(b) < 3) continue;
            ThreePathSearch search(g, {a, a, a}, {b, b, b}, true);
            if (auto paths = search.run()) return Theta{a, b, *paths};
        }
    }
    return std::nullopt;
}

std::optional<Witness> search_pyramid(const Graph& g) {
    const auto tris = triangles(g);
    for (const auto& tri : tris) {
        for (Vertex apex = 0; apex < g.order(); ++apex) {
            if (g.degree(apex) < 3) continue;
            if (std::find(tri.begin(), tri.end(), apex) != tri.end()) continue;
            int hits = 0;
            for (Vertex t : tri) hits += g.adjacent(apex, t) ? 1 : 0;
            if (hits > 1) continue;
            ThreePathSearch search(g, {apex, apex, apex}, tri, false);
            if (auto paths = search.run()) return Pyramid{apex, tri, *paths};
        }
    }
    return std::nullopt;
}

std::optional<Witness> search_long_prism(const Graph& g) {
    const auto tris = triangles(g);
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& top = tris[i];
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            auto bottom = tris[j];
            bool disjoint = true;
            for (Vertex t : top)
                if (std::find(bottom.begin(), bottom.end(), t) != bottom.end()) disjoint = false;
            if (!disjoint) continue;
            std::sort(bottom.begin(), bottom.end());
            do {
                bool ok = true;
                int direct = 0;
                for (std::size_t p = 0; p < 3 && ok; ++p)
                    for (std::size_t q = 0; q < 3; ++q) {
                        if (!g.adjacent(top[p], bottom[q])) continue;
                        if (p != q) ok = false;
                        else ++direct;
                    }
                if (!ok || direct == 3) continue;
                ThreePathSearch search(g, top, bottom, false);
                if (auto paths = search.run()) return LongPrism{top, bottom, *paths};
            } while (std::next_permutation(bottom.begin(), bottom.end()));
        }
    }
    return std::nullopt;
}

/// Wheel test for a known hole: x needs three rim neighbours and two sectors
/// of length at least 2.
bool is_broken_wheel_on_hole(const Graph& g, const std::vector<Vertex>& rim, Vertex x) {
    const int k = static_cast<int>(rim.size());
    std::vector<int> spokes;
    for (int i = 0; i < k; ++i)
        if (g.adjacent(x, rim[static_cast<std::size_t>(i)])) spokes.push_back(i);
    if (spokes.size() < 3) return false;
    int long_sectors = 0;
    for (std::size_t i = 0; i < spokes.size(); ++i) {
        const int to = (i + 1 < spokes.size()) ? spokes[i + 1] : spokes[0] + k;
        if (to - spokes[i] >= 2) ++long_sectors;
    }
    return long_sectors >= 2;
}

std::optional<Witness> search_broken_wheel(const Graph& g) {
    std::optional<Witness> found;
    for_each_hole(g, g.all_vertices(), 4, g.order(), [&](const std::vector<Vertex>& rim) {
        for (Vertex x = 0; x < g.order(); ++x) {
            if (std::find(rim.begin(), rim.end(), x) != rim.end()) continue;
            if (g.neighbors(x).count() < 3) continue;
            if (is_broken_wheel_on_hole(g, rim, x)) {
                found = BrokenWheel{rim, x};
                return true;
            }
        }
        return false;
    });
    return found;
}

bool grow_hole(const Graph& g, const VertexSet& allowed, int max_len, std::vector<Vertex>& path, VertexSet& on_path,
               const std::function<bool(const std::vector<Vertex>&)>& visit, int min_len) {
    const Vertex root = path.front();
    const Vertex tail = path.back();
    const int len = static_cast<int>(path.size());
    for (Vertex w : g.neighbors(tail) & allowed) {
        if (w <= root || on_path.contains(w)) continue;
        VertexSet contacts = g.neighbors(w) & on_path;
        contacts.erase(tail);
        const bool closes = contacts.contains(root);
        contacts.erase(root);
        if (!contacts.empty()) continue;
        if (closes) {
            // Closing gives a cycle of len + 1 vertices; orient canonically.
            if (len + 1 < 4 || len + 1 < min_len || len + 1 > max_len || path[1] > w) continue;
            path.push_back(w);
            const bool stop = visit(path);
            path.pop_back();
            if (stop) return true;
            continue;
        }
        if (len + 1 >= max_len) continue;
        path.push_back(w);
        on_path.insert(w);
        const bool stop = grow_hole(g, allowed, max_len, path, on_path, visit, min_len);
        on_path.erase(w);
        path.pop_back();
        if (stop) return true;
    }
    return false;
}

}  // namespace

bool for_each_hole(const Graph& g, const VertexSet& within, int min_len, int max_len,
                   const std::function<bool(const std::vector<Vertex>&)>& visit) {
    for (Vertex r : within) {
        std::vector<Vertex> path{r};
        VertexSet on_path(g.order());
        on_path.insert(r);
        if (grow_hole(g, within, max_len, path, on_path, visit, min_len)) return true;
    }
    return false;
}

std::optional<Witness> find_config_exhaustive(const Graph& g, SearchTarget target) {
    switch (target) {
        case SearchTarget::Pyramid: return search_pyramid(g);
        case SearchTarget::Theta: return search_theta(g);
        case SearchTarget::LongPrism: return search_long_prism(g);
        case SearchTarget::BrokenWheel: return search_broken_wheel(g);
        case SearchTarget::Any:
            for (auto t : {SearchTarget::Pyramid, SearchTarget::Theta, SearchTarget::LongPrism, SearchTarget::BrokenWheel})
                if (auto w = find_config_exhaustive(g, t)) return w;
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace truemper
