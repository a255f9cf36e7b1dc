#include "truemper/witness.hpp"

#include <algorithm>

namespace truemper {

std::string_view to_string(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Pyramid: return "pyramid";
        case ConfigKind::Theta: return "theta";
        case ConfigKind::LongPrism: return "long-prism";
        case ConfigKind::BrokenWheel: return "broken-wheel";
    }
    return "unknown";
}

ConfigKind kind_of(const Witness& w) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pyramid>) return ConfigKind::Pyramid;
            else if constexpr (std::is_same_v<T, Theta>) return ConfigKind::Theta;
            else if constexpr (std::is_same_v<T, LongPrism>) return ConfigKind::LongPrism;
            else return ConfigKind::BrokenWheel;
        },
        w);
}

std::vector<Vertex> witness_vertices(const Witness& w) {
    std::vector<Vertex> out;
    std::visit(
        [&out](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BrokenWheel>) {
                out = x.rim;
                out.push_back(x.center);
            } else {
                for (const Path& p : x.paths) out.insert(out.end(), p.begin(), p.end());
                if constexpr (std::is_same_v<T, Pyramid>) {
                    out.push_back(x.apex);
                    out.insert(out.end(), x.triangle.begin(), x.triangle.end());
                } else if constexpr (std::is_same_v<T, Theta>) {
                    out.push_back(x.hub1);
                    out.push_back(x.hub2);
                } else {
                    out.insert(out.end(), x.top.begin(), x.top.end());
                    out.insert(out.end(), x.bottom.begin(), x.bottom.end());
                }
            }
        },
        w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> sector_lengths(const Graph& g, const BrokenWheel& w) {
    const int k = static_cast<int>(w.rim.size());
    std::vector<int> spokes;
    for (int i = 0; i < k; ++i)
        if (g.adjacent(w.center, w.rim[static_cast<std::size_t>(i)])) spokes.push_back(i);
    std::vector<int> lengths;
    if (spokes.empty()) return lengths;
    for (std::size_t i = 0; i < spokes.size(); ++i) {
        const int from = spokes[i];
        const int to = (i + 1 < spokes.size()) ? spokes[i + 1] : spokes[0] + k;
        lengths.push_back(to - from);
    }
    return lengths;
}

}  // namespace truemper
