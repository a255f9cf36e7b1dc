#include "truemper/frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace truemper {

namespace {

enum Slot : int { kX, kA, kB, kC, kD, kAp, kBp, kCp, kDp, kAm, kBm, kCm, kDm, kSlots };

enum class Len { Zero, One, Two, Long };

/// Rim layout shared by all frames with the same coincidence pattern. Nodes
/// are distinct rim vertices in clockwise order; several slots may name the
/// same node. Between node i and node i+1 there is either an edge or, when
/// gap_after[i] is set, an unnamed stretch of rim (possibly empty).
struct Template {
    std::vector<std::vector<int>> nodes;
    std::vector<bool> gap_after;
    std::array<int, kSlots> node_of{};
    std::vector<bool> sees_x, misses_x;
    std::vector<int> dfs_order;
    std::vector<int> parent;  ///< for non-anchor nodes: an anchor joined by an edge
};

int node_count(const Template& t) { return static_cast<int>(t.nodes.size()); }

Template build(Len p, Len q, Len r, Len s) {
    Template t;
    auto add = [&](std::initializer_list<int> slots) {
        t.nodes.emplace_back(slots);
        t.gap_after.push_back(false);
    };
    auto gap = [&] { t.gap_after.back() = true; };

    add({kA});
    if (p == Len::Two) {
        add({kAp, kBm});
    } else {
        add({kAp});
        gap();
        add({kBm});
    }
    add({kB});
    switch (q) {
        case Len::Zero: t.nodes.back().push_back(kC); break;
        case Len::One: add({kC}); break;
        case Len::Two: add({kBp, kCm}); add({kC}); break;
        case Len::Long: add({kBp}); gap(); add({kCm}); add({kC}); break;
    }
    if (r == Len::Two) {
        add({kCp, kDm});
    } else {
        add({kCp});
        gap();
        add({kDm});
    }
    switch (s) {
        case Len::Zero: t.nodes.front().push_back(kD); break;
        case Len::One: add({kD}); break;
        case Len::Two: add({kD}); add({kDp, kAm}); break;
        case Len::Long: add({kD}); add({kDp}); gap(); add({kAm}); break;
    }

    t.node_of.fill(-1);
    for (int i = 0; i < node_count(t); ++i)
        for (int slot : t.nodes[static_cast<std::size_t>(i)]) t.node_of[static_cast<std::size_t>(slot)] = i;
    auto alias = [&](int slot, int target) {
        const int node = t.node_of[static_cast<std::size_t>(target)];
        t.node_of[static_cast<std::size_t>(slot)] = node;
        t.nodes[static_cast<std::size_t>(node)].push_back(slot);
    };
    if (q == Len::Zero) {
        alias(kBp, kCp);
        alias(kCm, kBm);
    } else if (q == Len::One) {
        alias(kBp, kC);
        alias(kCm, kB);
    }
    if (s == Len::Zero) {
        alias(kDp, kAp);
        alias(kAm, kDm);
    } else if (s == Len::One) {
        alias(kDp, kA);
        alias(kAm, kD);
    }

    const int k = node_count(t);
    t.sees_x.assign(static_cast<std::size_t>(k), false);
    t.misses_x.assign(static_cast<std::size_t>(k), false);
    for (int slot : {kA, kB, kC, kD}) t.sees_x[static_cast<std::size_t>(t.node_of[static_cast<std::size_t>(slot)])] = true;
    for (int slot : {kAp, kBm, kCp, kDm}) t.misses_x[static_cast<std::size_t>(t.node_of[static_cast<std::size_t>(slot)])] = true;

    t.parent.assign(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i)
        if (t.sees_x[static_cast<std::size_t>(i)]) t.dfs_order.push_back(i);
    for (int i = 0; i < k; ++i) {
        if (t.sees_x[static_cast<std::size_t>(i)]) continue;
        const int prev = (i + k - 1) % k;
        const int next = (i + 1) % k;
        if (!t.gap_after[static_cast<std::size_t>(prev)] && t.sees_x[static_cast<std::size_t>(prev)]) t.parent[static_cast<std::size_t>(i)] = prev;
        else if (!t.gap_after[static_cast<std::size_t>(i)] && t.sees_x[static_cast<std::size_t>(next)]) t.parent[static_cast<std::size_t>(i)] = next;
        else throw std::logic_error("frame template: rim node without anchored neighbour");
        t.dfs_order.push_back(i);
    }
    return t;
}

const std::vector<Template>& templates() {
    static const std::vector<Template> all = [] {
        std::vector<Template> out;
        for (Len p : {Len::Two, Len::Long})
            for (Len q : {Len::Zero, Len::One, Len::Two, Len::Long})
                for (Len r : {Len::Two, Len::Long})
                    for (Len s : {Len::Zero, Len::One, Len::Two, Len::Long})
                        if (!(q == Len::Zero && s == Len::Zero)) out.push_back(build(p, q, r, s));
        return out;
    }();
    return all;
}

/// Adjacency requirement between two rim nodes: 1 must, 0 must not, -1 free.
int edge_rule(const Template& t, int i, int j) {
    const int k = node_count(t);
    if ((i + 1) % k == j) return t.gap_after[static_cast<std::size_t>(i)] ? -1 : 1;
    if ((j + 1) % k == i) return t.gap_after[static_cast<std::size_t>(j)] ? -1 : 1;
    return 0;
}

bool fits(const Graph& g, const Template& t, Vertex x, const std::vector<Vertex>& at, int i, Vertex v) {
    if (v == x) return false;
    if (t.sees_x[static_cast<std::size_t>(i)] && !g.adjacent(v, x)) return false;
    if (t.misses_x[static_cast<std::size_t>(i)] && g.adjacent(v, x)) return false;
    for (int j = 0; j < node_count(t); ++j) {
        const Vertex w = at[static_cast<std::size_t>(j)];
        if (w < 0 || j == i) continue;
        if (w == v) return false;
        const int rule = edge_rule(t, i, j);
        if (rule >= 0 && g.adjacent(v, w) != (rule == 1)) return false;
    }
    return true;
}

Frame to_frame(const Template& t, Vertex x, const std::vector<Vertex>& at) {
    auto get = [&](int slot) { return at[static_cast<std::size_t>(t.node_of[static_cast<std::size_t>(slot)])]; };
    return Frame{x,        get(kA),  get(kB),  get(kC),  get(kD),  get(kAp), get(kBp),
                 get(kCp), get(kDp), get(kAm), get(kBm), get(kCm), get(kDm)};
}

bool assign(const Graph& g, const Template& t, Vertex x, std::vector<Vertex>& at, std::size_t depth,
            const std::function<bool(const Frame&)>& visit) {
    if (depth == t.dfs_order.size()) return visit(to_frame(t, x, at));
    const int i = t.dfs_order[depth];
    const int parent = t.parent[static_cast<std::size_t>(i)];
    const VertexSet& pool = parent < 0 ? g.neighbors(x) : g.neighbors(at[static_cast<std::size_t>(parent)]);
    for (Vertex v : pool) {
        if (!fits(g, t, x, at, i, v)) continue;
        at[static_cast<std::size_t>(i)] = v;
        if (assign(g, t, x, at, depth + 1, visit)) return true;
        at[static_cast<std::size_t>(i)] = -1;
    }
    return false;
}

std::array<Vertex, kSlots> slots_of(const Frame& f) {
    return {f.x, f.a, f.b, f.c, f.d, f.a_plus, f.b_plus, f.c_plus, f.d_plus, f.a_minus, f.b_minus, f.c_minus, f.d_minus};
}

}  // namespace

std::string frame_violation(const Graph& g, const Frame& f) {
    const auto s = slots_of(f);
    for (Vertex v : s)
        if (v < 0 || v >= g.order()) return "frame entry out of range";

    const Len p = f.a_plus == f.b_minus ? Len::Two : Len::Long;
    const Len r = f.c_plus == f.d_minus ? Len::Two : Len::Long;
    auto gap_len = [](Vertex from, Vertex from_plus, Vertex to, Vertex to_minus) {
        if (from == to) return Len::Zero;
        if (from_plus == to) return Len::One;
        if (from_plus == to_minus) return Len::Two;
        return Len::Long;
    };
    const Len q = gap_len(f.b, f.b_plus, f.c, f.c_minus);
    const Len sl = gap_len(f.d, f.d_plus, f.a, f.a_minus);
    if (q == Len::Zero && sl == Len::Zero) return "b = c and d = a together";

    const Template t = build(p, q, r, sl);
    std::vector<Vertex> at(t.nodes.size(), -1);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        at[i] = s[static_cast<std::size_t>(t.nodes[i].front())];
        for (int slot : t.nodes[i])
            if (s[static_cast<std::size_t>(slot)] != at[i]) return "frame entries do not follow a consistent rim pattern";
    }
    std::vector<Vertex> placed(t.nodes.size(), -1);
    for (int i = 0; i < node_count(t); ++i) {
        if (!fits(g, t, f.x, placed, i, at[static_cast<std::size_t>(i)]))
            return "frame adjacency pattern violated at rim position " + std::to_string(i);
        placed[static_cast<std::size_t>(i)] = at[static_cast<std::size_t>(i)];
    }
    return "";
}

bool for_each_frame(const Graph& g, Vertex x, const std::function<bool(const Frame&)>& visit) {
    if (g.degree(x) < 3) return false;
    for (const Template& t : templates()) {
        std::vector<Vertex> at(t.nodes.size(), -1);
        if (assign(g, t, x, at, 0, visit)) return true;
    }
    return false;
}

std::vector<Frame> frames_of(const Graph& g, const BrokenWheel& w) {
    std::vector<Frame> out;
    for (int orientation = 0; orientation < 2; ++orientation) {
        std::vector<Vertex> rim = w.rim;
        if (orientation == 1) std::reverse(rim.begin(), rim.end());
        const int k = static_cast<int>(rim.size());
        auto at = [&](int i) { return rim[static_cast<std::size_t>(((i % k) + k) % k)]; };
        std::vector<int> spokes;
        for (int i = 0; i < k; ++i)
            if (g.adjacent(w.center, rim[static_cast<std::size_t>(i)])) spokes.push_back(i);
        // Long sectors as (start, end) rim positions, end unwrapped past k.
        std::vector<std::pair<int, int>> sectors;
        for (std::size_t i = 0; i < spokes.size(); ++i) {
            const int to = i + 1 < spokes.size() ? spokes[i + 1] : spokes[0] + k;
            if (to - spokes[i] >= 2) sectors.emplace_back(spokes[i], to);
        }
        for (const auto& P : sectors)
            for (const auto& R : sectors) {
                if (P == R) continue;
                const int a = P.first, b = P.second, c = R.first, d = R.second;
                out.push_back(Frame{w.center, at(a), at(b), at(c), at(d), at(a + 1), at(b + 1), at(c + 1), at(d + 1),
                                    at(a - 1), at(b - 1), at(c - 1), at(d - 1)});
            }
    }
    return out;
}

std::array<Path, 4> connect_frame(const Graph& g, const Frame& f) {
    VertexSet around = g.closed_neighborhood(f.a) | g.closed_neighborhood(f.b) | g.closed_neighborhood(f.c) |
                       g.closed_neighborhood(f.d);
    const VertexSet around_x = around | g.closed_neighborhood(f.x);
    auto connect = [&](const VertexSet& base, Vertex s, Vertex t) -> Path {
        VertexSet forbidden = base;
        forbidden.erase(s);
        forbidden.erase(t);
        return shortest_path_avoiding(g, s, t, forbidden).value_or(Path{});
    };
    std::array<Path, 4> out;
    out[0] = connect(around_x, f.a_plus, f.b_minus);
    if (f.b != f.c) out[1] = connect(around, f.b_plus, f.c_minus);
    out[2] = connect(around_x, f.c_plus, f.d_minus);
    if (f.d != f.a) out[3] = connect(around, f.d_plus, f.a_minus);
    return out;
}

}  // namespace truemper
