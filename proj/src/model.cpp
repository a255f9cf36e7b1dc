#include "truemper/model.hpp"

#include <array>

namespace truemper {

namespace {

bool touches(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (Vertex v : x)
        if (g.neighbors(v).intersects(y)) return true;
    return false;
}

}  // namespace

std::string model_violation(const Graph& g, const InducedMinorModel& m) {
    const std::array<const VertexSet*, 5> sets{&m.u, &m.v, &m.a, &m.b, &m.c};
    static constexpr std::array<const char*, 5> names{"X_u", "X_v", "X_a", "X_b", "X_c"};
    for (std::size_t i = 0; i < 5; ++i) {
        if (sets[i]->universe() != g.order()) return std::string(names[i]) + " has the wrong universe";
        if (sets[i]->empty()) return std::string(names[i]) + " is empty";
        if (!is_connected(g, *sets[i])) return std::string(names[i]) + " is not connected";
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (sets[i]->intersects(*sets[j])) return std::string(names[i]) + " meets " + names[j];
            // u, v are indices 0, 1; the middles 2..4 must see both hubs and
            // nothing else.
            const bool should_touch = (i < 2) != (j < 2);
            if (touches(g, *sets[i], *sets[j]) != should_touch)
                return std::string(names[i]) + (should_touch ? " misses " : " touches ") + names[j];
        }
    return {};
}

}  // namespace truemper
