#include "truemper/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace truemper {

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (VertexSet& c : components(g, s.complement()))
        if (g.open_neighborhood(c) == s) out.push_back(std::move(c));
    return out;
}

std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g) {
    // Keyed by sorted member list, which also fixes the output order.
    std::map<std::vector<Vertex>, MinimalSeparator> found;
    std::deque<VertexSet> queue;

    auto consider = [&](const VertexSet& candidate) {
        auto key = candidate.to_vector();
        if (found.contains(key)) return;
        auto full = full_components(g, candidate);
        if (full.size() < 2) return;
        found.emplace(std::move(key), MinimalSeparator{candidate, full[0], full[1]});
        queue.push_back(candidate);
    };

    for (Vertex v = 0; v < g.order(); ++v)
        for (const VertexSet& c : components(g, g.closed_neighborhood(v).complement())) consider(g.open_neighborhood(c));

    while (!queue.empty()) {
        const VertexSet s = std::move(queue.front());
        queue.pop_front();
        for (Vertex x : s) {
            const VertexSet removed = s | g.neighbors(x);
            for (const VertexSet& c : components(g, removed.complement())) consider(g.open_neighborhood(c));
        }
    }

    std::vector<MinimalSeparator> out;
    out.reserve(found.size());
    for (auto& [key, sep] : found) out.push_back(std::move(sep));
    return out;
}

std::optional<SeparatorViolation> find_separator_violation(const Graph& g) {
    for (auto& sep : enumerate_minimal_separators(g))
        if (auto triple = find_independent_set(g, sep.set, 3)) return SeparatorViolation{std::move(sep), *triple};
    return std::nullopt;
}

bool k23_free_by_separators(const Graph& g) { return !find_separator_violation(g).has_value(); }

bool has_clique_cutset(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("has_clique_cutset requires a connected graph");
    const auto seps = enumerate_minimal_separators(g);
    return std::any_of(seps.begin(), seps.end(), [&](const MinimalSeparator& s) { return is_clique(g, s.set); });
}

}  // namespace truemper
