#ifndef TRUEMPER_FRAME_HPP
#define TRUEMPER_FRAME_HPP

#include "truemper/graph.hpp"
#include "truemper/witness.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace truemper {

/// Skeleton of a broken wheel: center x, four spokes a, b, c, d in clockwise
/// order (P = a..b and R = c..d are long sectors), and the rim neighbours of
/// each spoke end (a⁺ follows a, a⁻ precedes it, and so on).
struct Frame {
    Vertex x = -1;
    Vertex a = -1, b = -1, c = -1, d = -1;
    Vertex a_plus = -1, b_plus = -1, c_plus = -1, d_plus = -1;
    Vertex a_minus = -1, b_minus = -1, c_minus = -1, d_minus = -1;

    bool operator==(const Frame&) const = default;
};

/// Empty string if f is the frame of some broken wheel of g, as far as the
/// 13 frame vertices can tell: the rim vertices named by f must form a
/// cyclic sequence in which exactly the consecutive pairs may be adjacent
/// (pairs with an unnamed stretch between them may or may not be), x sees
/// a, b, c, d and misses a⁺, b⁻, c⁺, d⁻.
std::string frame_violation(const Graph& g, const Frame& f);

/// Calls `visit` on every frame of g with center x, each exactly once.
/// Stops early when `visit` returns true; returns whether it stopped.
bool for_each_frame(const Graph& g, Vertex x, const std::function<bool(const Frame&)>& visit);

/// Every frame read off a broken wheel: each ordered choice of two distinct
/// long sectors as P and R, in both orientations of the rim.
std::vector<Frame> frames_of(const Graph& g, const BrokenWheel& w);

/// The four connecting paths of a frame: P' (a⁺..b⁻), Q' (b⁺..c⁻),
/// R' (c⁺..d⁻), S' (d⁺..a⁻), each shortest under its own exclusion set.
/// Missing paths are left empty.
std::array<Path, 4> connect_frame(const Graph& g, const Frame& f);

}  // namespace truemper

#endif  // TRUEMPER_FRAME_HPP
