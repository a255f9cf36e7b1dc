#ifndef TRUEMPER_STM_HPP
#define TRUEMPER_STM_HPP

#include "truemper/graph.hpp"

#include <array>
#include <string>

namespace truemper {

/// S: subdivided claw. T: three paths hanging off a triangle. M: a path plus
/// a center with at least two neighbours inside it.
enum class StmClass { S, T, M };

/// An induced subgraph in S ∪ T ∪ M whose extremities are a prescribed
/// independent triple I.
struct STMGraph {
    StmClass kind = StmClass::S;
    VertexSet vertices;
    std::array<Vertex, 3> extremities{};  ///< in the order I was given

    Vertex apex = -1;                    ///< S only
    std::array<Vertex, 3> triangle{-1, -1, -1};  ///< T only; triangle[i] leads to extremities[i]
    /// S: apex -> extremities[i]; T: triangle[i] -> extremities[i].
    std::array<Path, 3> legs;

    Vertex center = -1;  ///< M only; one of the extremities
    Path spine;          ///< M only; joins the two other extremities
};

std::string_view to_string(StmClass kind);

/// Checks the class invariants on g[vertices] directly from degrees and
/// adjacency, then checks the recorded legs/spine against them. Empty string
/// when valid.
std::string stm_violation(const Graph& g, const STMGraph& h);

struct ExtractStats {
    int iterations = 0;
};

/// Finds H ⊆ g[C ∪ I] in S ∪ T ∪ M with extremities exactly I, by repeatedly
/// shrinking a pair (P, P') of chordless paths: P joins two members of I
/// through C, P' runs from the third to the first vertex seeing P's interior.
///
/// Preconditions (std::invalid_argument otherwise): I is an independent set
/// of three vertices, C is a component of g \ I, and every member of I has a
/// neighbour in C.
STMGraph extract_stm(const Graph& g, const std::array<Vertex, 3>& I, const VertexSet& C,
                     ExtractStats* stats = nullptr);

}  // namespace truemper

#endif  // TRUEMPER_STM_HPP
