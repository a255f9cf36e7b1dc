#ifndef TRUEMPER_WITNESS_HPP
#define TRUEMPER_WITNESS_HPP

#include "truemper/graph.hpp"

#include <array>
#include <string_view>
#include <variant>
#include <vector>

namespace truemper {

enum class ConfigKind { Pyramid, Theta, LongPrism, BrokenWheel };

std::string_view to_string(ConfigKind kind);

/// Two nonadjacent hubs joined by three paths; every path runs hub1 -> hub2.
struct Theta {
    Vertex hub1 = -1;
    Vertex hub2 = -1;
    std::array<Path, 3> paths;
};

/// paths[i] runs from the apex to triangle[i].
struct Pyramid {
    Vertex apex = -1;
    std::array<Vertex, 3> triangle{};
    std::array<Path, 3> paths;
};

/// paths[i] runs from top[i] to bottom[i]; top and bottom are triangles.
struct LongPrism {
    std::array<Vertex, 3> top{};
    std::array<Vertex, 3> bottom{};
    std::array<Path, 3> paths;
};

/// Rim listed in cyclic (clockwise) order.
struct BrokenWheel {
    std::vector<Vertex> rim;
    Vertex center = -1;
};

/// Certificate that a graph contains one of the four Truemper
/// configurations forcing a K2,3 induced minor.
using Witness = std::variant<Pyramid, Theta, LongPrism, BrokenWheel>;

ConfigKind kind_of(const Witness& w);

/// Every vertex the witness uses, deduplicated and sorted.
std::vector<Vertex> witness_vertices(const Witness& w);

/// Sector lengths of a wheel, starting at the first center neighbour on the
/// rim and walking clockwise. Empty when the center has no rim neighbour.
std::vector<int> sector_lengths(const Graph& g, const BrokenWheel& w);

}  // namespace truemper

#endif  // TRUEMPER_WITNESS_HPP
