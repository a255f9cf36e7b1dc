#ifndef TRUEMPER_ORACLE_HPP
#define TRUEMPER_ORACLE_HPP

#include "truemper/graph.hpp"
#include "truemper/model.hpp"
#include "truemper/witness.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace truemper {

/// Complete backtracking for a K2,3 induced minor model. Intended for small
/// graphs (n <= 14); throws std::invalid_argument above 64 vertices.
std::optional<InducedMinorModel> find_k23_model(const Graph& g);

enum class SearchTarget { Pyramid, Theta, LongPrism, BrokenWheel, Any };

/// Complete search for an induced configuration of the requested kind.
/// `Any` tries pyramid, theta, long prism, broken wheel in that order.
std::optional<Witness> find_config_exhaustive(const Graph& g, SearchTarget target);

/// Calls `visit` on every hole of g exactly once (starting at its smallest
/// vertex, oriented towards the smaller of that vertex's rim neighbours).
/// Holes are restricted to `within` and to lengths in [min_len, max_len].
/// Stops early when `visit` returns true; returns whether it stopped.
bool for_each_hole(const Graph& g, const VertexSet& within, int min_len, int max_len,
                   const std::function<bool(const std::vector<Vertex>&)>& visit);

struct MinimalSeparator {
    VertexSet set;
    /// Two components C of G \ S with N(C) = S.
    VertexSet full_a, full_b;
};

/// All minimal separators in lexicographic order of their sorted member lists.
/// A disconnected graph has the empty set as a minimal separator.
std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g);

/// Full components of G \ S, i.e. components C with N(C) = S.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

struct SeparatorViolation {
    MinimalSeparator separator;
    std::vector<Vertex> independent_triple;
};

/// First minimal separator (in enumeration order) containing an independent
/// triple, if any.
std::optional<SeparatorViolation> find_separator_violation(const Graph& g);

/// True iff no minimal separator has an independent set of size 3, i.e. g
/// has no K2,3 induced minor.
bool k23_free_by_separators(const Graph& g);

/// True iff some minimal separator is a clique. Requires a connected graph
/// (throws std::invalid_argument otherwise).
bool has_clique_cutset(const Graph& g);

}  // namespace truemper

#endif  // TRUEMPER_ORACLE_HPP
