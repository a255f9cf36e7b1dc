#ifndef TRUEMPER_PATTERNS_HPP
#define TRUEMPER_PATTERNS_HPP

#include "truemper/graph.hpp"
#include "truemper/witness.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace truemper {

enum class ConfigShape { Prism, Pyramid, Theta, BrokenWheel };

/// Parameters of a Truemper configuration.
///
/// For the three path configurations `lengths` holds the three path lengths
/// (edges). For a broken wheel it holds the sector lengths clockwise from a
/// designated spoke; the center is adjacent to exactly the sector endpoints.
struct ConfigSpec {
    ConfigShape shape = ConfigShape::Theta;
    std::vector<int> lengths;
};

/// Empty when valid, otherwise the reason `spec` is rejected.
std::string config_spec_violation(const ConfigSpec& spec);

ConfigSpec theta_spec(int l1, int l2, int l3);
ConfigSpec pyramid_spec(int l1, int l2, int l3);
ConfigSpec prism_spec(int l1, int l2, int l3);
ConfigSpec broken_wheel_spec(std::vector<int> sectors);

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  ///< one per vertex
};

/// Named gadgets: "co-domino", "net", "cube", "k23", plus families
/// "c<n>" (cycle), "k<n>" (complete), "p<n>" (path on n vertices).
/// Throws std::invalid_argument on an unknown name.
LabeledGraph make_named(std::string_view name);

struct Configuration {
    Graph graph;
    /// Canonical description of the whole graph. A prism (1,1,1) is not
    /// long; its witness is still a LongPrism record but fails validation.
    Witness witness;
};

/// Exact configuration graph with canonical labels: hubs/apex/triangles (or
/// the center) first, then path interiors in declaration order.
/// Throws std::invalid_argument for an invalid spec.
Configuration make_config(const ConfigSpec& spec);

/// The 4k-vertex graph on A ∪ B ∪ C ∪ D (indices A=[0,k), B=[k,2k),
/// C=[2k,3k), D=[3k,4k)).
Graph make_gk(int k);

/// Configuration plus `background_n` random vertices. Background vertices are
/// joined among themselves with probability `edge_prob`; each one is also
/// anchored at a random configuration vertex v and joined to members of N[v]
/// with probability `edge_prob`. The configuration occupies indices
/// [0, config order) and stays induced.
Graph plant(const ConfigSpec& spec, int background_n, double edge_prob, std::uint64_t seed);

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random chordal graph: every new vertex is joined to a clique of the graph
/// built so far.
Graph random_chordal(int n, std::uint64_t seed);

/// Deterministic generator shared by the random constructions; the raw
/// engine output is specified by the standard so results are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [0, bound).
    int below(int bound);
    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace truemper

#endif  // TRUEMPER_PATTERNS_HPP
