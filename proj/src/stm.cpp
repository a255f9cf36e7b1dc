#include "truemper/stm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace truemper {

namespace {

VertexSet interior_of(const Graph& g, const Path& p) {
    VertexSet s = g.empty_set();
    for (std::size_t i = 1; i + 1 < p.size(); ++i) s.insert(p[i]);
    return s;
}

/// Shortest path from `from` through `region` to the first vertex seeing
/// `target`; intermediate vertices do not see `target`.
std::optional<Path> first_contact(const Graph& g, Vertex from, const VertexSet& target, const VertexSet& region) {
    if (g.neighbors(from).intersects(target)) return Path{from};
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen = g.empty_set();
    seen.insert(from);
    std::vector<Vertex> layer{from};
    while (!layer.empty()) {
        VertexSet next = g.empty_set();
        for (Vertex v : layer)
            for (Vertex w : g.neighbors(v) & region)
                if (!seen.contains(w) && !next.contains(w)) {
                    next.insert(w);
                    parent[static_cast<std::size_t>(w)] = v;
                }
        // Parents are set by the first (smallest) vertex of the previous layer
        // that reaches them, because layers are scanned in increasing order.
        seen |= next;
        for (Vertex w : next) {
            if (!g.neighbors(w).intersects(target)) continue;
            Path p;
            for (Vertex x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) p.push_back(x);
            std::reverse(p.begin(), p.end());
            return p;
        }
        layer = next.to_vector();
    }
    return std::nullopt;
}

/// Prefix of `p` ending at its first vertex adjacent to `target`.
Path truncate_at_contact(const Graph& g, const Path& p, const VertexSet& target) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (target.contains(p[i])) throw std::logic_error("extract_stm: P' enters the interior of P");
        if (g.neighbors(p[i]).intersects(target)) return Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    throw std::logic_error("extract_stm: P' lost its contact with P");
}

Path reversed(Path p) {
    std::reverse(p.begin(), p.end());
    return p;
}

Path concat(Path a, const Path& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Path slice(const Path& p, std::size_t from, std::size_t to_inclusive) {
    return Path(p.begin() + static_cast<std::ptrdiff_t>(from), p.begin() + static_cast<std::ptrdiff_t>(to_inclusive) + 1);
}

void check_preconditions(const Graph& g, const std::array<Vertex, 3>& I, const VertexSet& C) {
    for (Vertex a : I)
        if (a < 0 || a >= g.order()) throw std::invalid_argument("extract_stm: extremity out of range");
    if (I[0] == I[1] || I[0] == I[2] || I[1] == I[2]) throw std::invalid_argument("extract_stm: extremities must be distinct");
    if (g.adjacent(I[0], I[1]) || g.adjacent(I[0], I[2]) || g.adjacent(I[1], I[2]))
        throw std::invalid_argument("extract_stm: extremities must be pairwise nonadjacent");
    if (C.universe() != g.order() || C.empty()) throw std::invalid_argument("extract_stm: C must be a nonempty vertex set");
    for (Vertex a : I)
        if (C.contains(a)) throw std::invalid_argument("extract_stm: C must avoid the extremities");
    if (!is_connected(g, C)) throw std::invalid_argument("extract_stm: C must be connected");
    VertexSet outside = g.open_neighborhood(C);
    for (Vertex a : I) outside.erase(a);
    if (!outside.empty()) throw std::invalid_argument("extract_stm: C must be a component of g minus I");
    for (Vertex a : I)
        if (!g.neighbors(a).intersects(C)) throw std::invalid_argument("extract_stm: every extremity needs a neighbour in C");
}

}  // namespace

std::string_view to_string(StmClass kind) {
    switch (kind) {
        case StmClass::S: return "S";
        case StmClass::T: return "T";
        case StmClass::M: return "M";
    }
    return "?";
}

STMGraph extract_stm(const Graph& g, const std::array<Vertex, 3>& I, const VertexSet& C, ExtractStats* stats) {
    check_preconditions(g, I, C);

    // ext[0], ext[1] are P's ends; ext[2] starts P'. Only ext[0] and ext[1]
    // ever swap.
    std::array<Vertex, 3> ext = I;
    auto P = shortest_path_through(g, ext[0], ext[1], C);
    if (!P) throw std::logic_error("extract_stm: no path through C");
    auto Pp = first_contact(g, ext[2], interior_of(g, *P), C - VertexSet::from_range(g.order(), *P));
    if (!Pp) throw std::logic_error("extract_stm: third extremity cannot reach P");

    auto finish = [&](STMGraph h) {
        h.extremities = I;
        h.vertices = g.empty_set();
        for (Vertex v : *P) h.vertices.insert(v);
        for (Vertex v : *Pp) h.vertices.insert(v);
        // Legs were built against ext; reorder them to match I.
        if (h.kind != StmClass::M) {
            std::array<Path, 3> legs;
            std::array<Vertex, 3> tri{-1, -1, -1};
            for (std::size_t i = 0; i < 3; ++i) {
                const std::size_t j = static_cast<std::size_t>(std::find(ext.begin(), ext.end(), I[i]) - ext.begin());
                legs[i] = std::move(h.legs[j]);
                tri[i] = h.triangle[j];
            }
            h.legs = std::move(legs);
            if (h.kind == StmClass::T) h.triangle = tri;
        }
        return h;
    };

    int iterations = 0;
    while (true) {
        ++iterations;
        if (stats) stats->iterations = iterations;
        Path& p = *P;
        Path& pp = *Pp;
        const Vertex u = pp.back();

        auto contacts = [&](Vertex w) {
            std::size_t lo = p.size(), hi = 0;
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                if (g.adjacent(w, p[i])) {
                    lo = std::min(lo, i);
                    hi = std::max(hi, i);
                }
            return std::pair{lo, hi};
        };
        auto [i1, i2] = contacts(u);

        if (u == ext[2]) {
            STMGraph h;
            if (i1 == i2) {
                h.kind = StmClass::S;
                h.apex = p[i1];
                h.legs[0] = reversed(slice(p, 0, i1));
                h.legs[1] = slice(p, i1, p.size() - 1);
                h.legs[2] = {p[i1], ext[2]};
            } else {
                h.kind = StmClass::M;
                h.center = ext[2];
                h.spine = p;
            }
            return finish(std::move(h));
        }

        const VertexSet on_pp = VertexSet::from_range(g.order(), pp);
        bool sees0 = g.neighbors(ext[0]).intersects(on_pp);
        bool sees1 = g.neighbors(ext[1]).intersects(on_pp);

        if (sees0 && sees1) {
            VertexSet through = on_pp;
            through.erase(ext[2]);
            auto np = shortest_path_through(g, ext[0], ext[1], through);
            if (!np) throw std::logic_error("extract_stm: no path through P'");
            *P = std::move(*np);
            *Pp = truncate_at_contact(g, pp, interior_of(g, *P));
            continue;
        }

        if (sees0) {
            std::swap(ext[0], ext[1]);
            std::reverse(p.begin(), p.end());
            std::swap(sees0, sees1);
            std::tie(i1, i2) = contacts(u);
        }

        if (sees1) {
            // u' is the neighbour of ext[1] on P' closest to u.
            std::size_t k = pp.size();
            while (k-- > 0)
                if (g.adjacent(ext[1], pp[k])) break;
            const Vertex v1 = p[i1];
            if (g.adjacent(v1, ext[1])) {
                STMGraph h;
                h.kind = StmClass::M;
                h.center = ext[1];
                h.spine = concat(slice(p, 0, i1), reversed(pp));
                return finish(std::move(h));
            }
            Path np = slice(p, 0, i1);
            for (std::size_t j = pp.size(); j-- > k;) np.push_back(pp[j]);
            np.push_back(ext[1]);
            Path npp = slice(pp, 0, k - 1);
            *P = std::move(np);
            *Pp = truncate_at_contact(g, npp, interior_of(g, *P));
            continue;
        }

        const Vertex v1 = p[i1];
        const Vertex v2 = p[i2];
        if (i1 == i2) {
            STMGraph h;
            h.kind = StmClass::S;
            h.apex = v1;
            h.legs[0] = reversed(slice(p, 0, i1));
            h.legs[1] = slice(p, i1, p.size() - 1);
            h.legs[2] = concat(Path{v1}, reversed(pp));
            return finish(std::move(h));
        }
        if (g.adjacent(v1, v2)) {
            STMGraph h;
            h.kind = StmClass::T;
            h.triangle = {v1, v2, u};
            h.legs[0] = reversed(slice(p, 0, i1));
            h.legs[1] = slice(p, i2, p.size() - 1);
            h.legs[2] = reversed(pp);
            return finish(std::move(h));
        }
        Path np = slice(p, 0, i1);
        np.push_back(u);
        np.insert(np.end(), p.begin() + static_cast<std::ptrdiff_t>(i2), p.end());
        Path npp(pp.begin(), pp.end() - 1);
        *P = std::move(np);
        *Pp = truncate_at_contact(g, npp, interior_of(g, *P));
    }
}

std::string stm_violation(const Graph& g, const STMGraph& h) {
    const VertexSet& H = h.vertices;
    if (H.universe() != g.order()) return "vertex set has the wrong universe";
    const auto& E = h.extremities;
    if (E[0] == E[1] || E[0] == E[2] || E[1] == E[2]) return "extremities are not distinct";
    for (Vertex e : E)
        if (!H.contains(e)) return "extremity outside the subgraph";
    if (!is_connected(g, H)) return "subgraph is disconnected";

    auto deg = [&](Vertex v) { return g.neighbors(v).count_common(H); };
    int edges2 = 0;
    for (Vertex v : H) edges2 += deg(v);
    const int m = edges2 / 2;
    const int n = H.count();
    auto is_extremity = [&](Vertex v) { return std::find(E.begin(), E.end(), v) != E.end(); };

    auto check_leg = [&](const Path& leg, Vertex from, Vertex to) -> std::string {
        if (leg.size() < 2 || leg.front() != from || leg.back() != to) return "leg has wrong endpoints";
        if (!is_chordless_path(g, leg)) return "leg is not a chordless path";
        for (Vertex v : leg)
            if (!H.contains(v)) return "leg leaves the subgraph";
        return "";
    };

    switch (h.kind) {
        case StmClass::S: {
            if (m != n - 1) return "S: subgraph is not a tree";
            for (Vertex v : H) {
                const int d = deg(v);
                if (v == h.apex) {
                    if (d != 3) return "S: apex does not have degree 3";
                } else if (is_extremity(v) ? d != 1 : d != 2) {
                    return "S: wrong degree at vertex " + std::to_string(v);
                }
            }
            int covered = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                if (auto err = check_leg(h.legs[i], h.apex, E[i]); !err.empty()) return "S: " + err;
                covered += static_cast<int>(h.legs[i].size()) - 1;
            }
            if (covered + 1 != n) return "S: legs do not cover the subgraph";
            return "";
        }
        case StmClass::T: {
            if (m != n) return "T: wrong number of edges";
            const auto& t = h.triangle;
            if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2])) return "T: triangle missing";
            for (Vertex v : H) {
                const int d = deg(v);
                const bool on_triangle = std::find(t.begin(), t.end(), v) != t.end();
                if (on_triangle ? d != 3 : (is_extremity(v) ? d != 1 : d != 2))
                    return "T: wrong degree at vertex " + std::to_string(v);
            }
            int covered = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                if (auto err = check_leg(h.legs[i], t[i], E[i]); !err.empty()) return "T: " + err;
                covered += static_cast<int>(h.legs[i].size());
            }
            if (covered != n) return "T: legs do not cover the subgraph";
            return "";
        }
        case StmClass::M: {
            if (!is_extremity(h.center)) return "M: center is not an extremity";
            VertexSet rest = H;
            rest.erase(h.center);
            if (!is_connected(g, rest)) return "M: subgraph minus center is disconnected";
            std::vector<Vertex> ends;
            for (Vertex v : rest) {
                const int d = g.neighbors(v).count_common(rest);
                if (d > 2) return "M: subgraph minus center is not a path";
                if (d <= 1) ends.push_back(v);
            }
            if (ends.size() != 2 || m - deg(h.center) != rest.count() - 1) return "M: subgraph minus center is not a path";
            for (Vertex e : ends)
                if (!is_extremity(e) || e == h.center) return "M: path ends are not the other extremities";
            if (deg(h.center) < 2) return "M: center has fewer than two neighbours";
            for (Vertex e : ends)
                if (g.adjacent(h.center, e)) return "M: center adjacent to a path end";
            if (static_cast<int>(h.spine.size()) != rest.count() || !is_chordless_path(g, h.spine))
                return "M: spine does not match";
            for (Vertex v : h.spine)
                if (!rest.contains(v)) return "M: spine does not match";
            return "";
        }
    }
    return "unknown class";
}

}  // namespace truemper
