#include "truemper/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace truemper {

namespace {

using Mask = std::uint64_t;

enum Role : int { kU = 0, kV = 1, kA = 2, kB = 3, kC = 4, kRoles = 5 };

// Roles whose branch sets must stay non-adjacent / must touch.
constexpr std::array<int, kRoles> kConflicts{
    1 << kV, 1 << kU, (1 << kB) | (1 << kC), (1 << kA) | (1 << kC), (1 << kA) | (1 << kB)};
constexpr std::array<int, kRoles> kNeeds{
    (1 << kA) | (1 << kB) | (1 << kC), (1 << kA) | (1 << kB) | (1 << kC), (1 << kU) | (1 << kV),
    (1 << kU) | (1 << kV), (1 << kU) | (1 << kV)};

/// Assigns every vertex to one of the five branch sets or leaves it unused,
/// in order of decreasing degree. Partial assignments are cut as soon as a
/// forbidden adjacency appears or some branch set can no longer become
/// connected and touch its required partners through unassigned vertices.
class ModelSearch {
public:
    explicit ModelSearch(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << w;
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    }

    std::optional<InducedMinorModel> run() {
        if (n_ < 5) return std::nullopt;
        unassigned_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        if (!dfs(0)) return std::nullopt;
        InducedMinorModel m{VertexSet(n_), VertexSet(n_), VertexSet(n_), VertexSet(n_), VertexSet(n_)};
        std::array<VertexSet*, kRoles> out{&m.u, &m.v, &m.a, &m.b, &m.c};
        for (int r = 0; r < kRoles; ++r)
            for (Vertex v = 0; v < n_; ++v)
                if (sets_[static_cast<std::size_t>(r)] >> v & 1) out[static_cast<std::size_t>(r)]->insert(v);
        return m;
    }

private:
    Mask neighborhood(Mask s) const {
        Mask out = 0;
        while (s) {
            out |= adj_[static_cast<std::size_t>(std::countr_zero(s))];
            s &= s - 1;
        }
        return out;
    }

    /// Vertices of `region` reachable from `start` inside `region`.
    Mask reach(Mask start, Mask region) const {
        Mask seen = start & region;
        Mask frontier = seen;
        while (frontier) {
            Mask next = neighborhood(frontier) & region & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    Mask available(int r) const {
        Mask blocked = 0;
        for (int s = 0; s < kRoles; ++s)
            if (kConflicts[static_cast<std::size_t>(r)] >> s & 1) blocked |= neighborhood(sets_[static_cast<std::size_t>(s)]);
        return unassigned_ & ~blocked;
    }

    bool feasible() const {
        std::array<Mask, kRoles> reachable{};
        std::array<Mask, kRoles> potential{};
        for (int r = 0; r < kRoles; ++r) {
            const Mask set = sets_[static_cast<std::size_t>(r)];
            const Mask avail = available(r);
            potential[static_cast<std::size_t>(r)] = set | avail;
            if (set == 0) {
                if (avail == 0) return false;
                reachable[static_cast<std::size_t>(r)] = avail;
                continue;
            }
            const Mask comp = reach(set & -set, set | avail);
            if ((set & ~comp) != 0) return false;
            reachable[static_cast<std::size_t>(r)] = comp;
        }
        for (int r = 0; r < kRoles; ++r) {
            if (sets_[static_cast<std::size_t>(r)] == 0) continue;
            const Mask around = neighborhood(reachable[static_cast<std::size_t>(r)]);
            for (int s = 0; s < kRoles; ++s)
                if ((kNeeds[static_cast<std::size_t>(r)] >> s & 1) && (around & potential[static_cast<std::size_t>(s)]) == 0)
                    return false;
        }
        return true;
    }

    bool complete() const {
        for (int r = 0; r < kRoles; ++r) {
            const Mask set = sets_[static_cast<std::size_t>(r)];
            if (set == 0 || reach(set & -set, set) != set) return false;
            const Mask around = neighborhood(set);
            for (int s = 0; s < kRoles; ++s) {
                const bool touch = (around & sets_[static_cast<std::size_t>(s)]) != 0;
                if ((kNeeds[static_cast<std::size_t>(r)] >> s & 1) && !touch) return false;
                if ((kConflicts[static_cast<std::size_t>(r)] >> s & 1) && touch) return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return complete();
        if (!feasible()) return false;
        const Vertex w = order_[idx];
        const Mask bit = Mask{1} << w;
        unassigned_ &= ~bit;
        for (int r = 0; r <= kRoles; ++r) {
            if (r < kRoles) {
                // u/v and a/b/c are interchangeable: open sets in order.
                if (r == kV && sets_[kU] == 0) continue;
                if (r == kB && sets_[kA] == 0) continue;
                if (r == kC && sets_[kB] == 0) continue;
                bool clash = false;
                for (int s = 0; s < kRoles; ++s)
                    if ((kConflicts[static_cast<std::size_t>(r)] >> s & 1) && (adj_[static_cast<std::size_t>(w)] & sets_[static_cast<std::size_t>(s)]))
                        clash = true;
                if (clash) continue;
                sets_[static_cast<std::size_t>(r)] |= bit;
                if (dfs(idx + 1)) return true;
                sets_[static_cast<std::size_t>(r)] &= ~bit;
            } else if (dfs(idx + 1)) {
                return true;
            }
        }
        unassigned_ |= bit;
        return false;
    }

    int n_;
    std::vector<Mask> adj_;
    std::vector<Vertex> order_;
    std::array<Mask, kRoles> sets_{};
    Mask unassigned_ = 0;
};

}  // namespace

std::optional<InducedMinorModel> find_k23_model(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("find_k23_model supports at most 64 vertices");
    return ModelSearch(g).run();
}

}  // namespace truemper
