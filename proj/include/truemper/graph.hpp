#ifndef TRUEMPER_GRAPH_HPP
#define TRUEMPER_GRAPH_HPP

#include "truemper/vertex_set.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace truemper {

using Edge = std::pair<Vertex, Vertex>;

/// Ordered sequence of pairwise distinct vertices; consecutive entries are
/// adjacent in the host graph. May be empty.
using Path = std::vector<Vertex>;

struct InducedSubgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Repeated edges collapse.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }

    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(Vertex v) const { return neighbors(v).count(); }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    /// N[S]
    VertexSet closed_neighborhood(const VertexSet& s) const;
    /// N(S) = N[S] \ S
    VertexSet open_neighborhood(const VertexSet& s) const;
    VertexSet closed_neighborhood(Vertex v) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    InducedSubgraph induced(const VertexSet& s) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// g[S] relabelled to 0..|S|-1, keeping the mapping back to the parent.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    ///< new index -> parent index
    std::vector<Vertex> from_parent;  ///< parent index -> new index, or -1

    Path lift(const Path& p) const;
    VertexSet lift(const VertexSet& s, int parent_universe) const;
};

/// Connected components of g[s], each as a vertex set, ordered by their
/// minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Shortest s-t path in g minus `forbidden`. Among shortest paths, each
/// vertex's predecessor is the smallest-index vertex on the previous BFS
/// layer, which makes the answer unique.
std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex s, Vertex t, const VertexSet& forbidden);

/// Shortest s-t path whose interior lies in `interior` (s and t need not).
std::optional<Path> shortest_path_through(const Graph& g, Vertex s, Vertex t, const VertexSet& interior);

/// True iff `cycle` lists at least 4 distinct vertices that form a chordless
/// cycle in g (in the given cyclic order).
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

/// True iff p is a path of g without chords. The empty path qualifies.
bool is_chordless_path(const Graph& g, std::span<const Vertex> p);

/// True iff g is a path in g (distinct vertices, consecutive ones adjacent).
bool is_path(const Graph& g, std::span<const Vertex> p);

/// True iff g[s] has an independent set of size k + 1.
bool independence_exceeds(const Graph& g, const VertexSet& s, int k);

/// Some independent set of size k + 1 in g[s], lexicographically first.
std::optional<std::vector<Vertex>> find_independent_set(const Graph& g, const VertexSet& s, int size);

bool is_clique(const Graph& g, const VertexSet& s);

/// Chordality test by maximum cardinality search.
bool is_chordal(const Graph& g);

}  // namespace truemper

#endif  // TRUEMPER_GRAPH_HPP
