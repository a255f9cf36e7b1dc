#ifndef TRUEMPER_MODEL_HPP
#define TRUEMPER_MODEL_HPP

#include "truemper/graph.hpp"

#include <string>

namespace truemper {

/// Branch sets of an induced minor model of K2,3 with parts {u, v} and
/// {a, b, c}.
struct InducedMinorModel {
    VertexSet u, v, a, b, c;

    bool operator==(const InducedMinorModel&) const = default;
};

/// Empty string when `m` is a valid K2,3 model in g; otherwise a short
/// description of the first violated condition.
std::string model_violation(const Graph& g, const InducedMinorModel& m);

inline bool is_valid_model(const Graph& g, const InducedMinorModel& m) { return model_violation(g, m).empty(); }

}  // namespace truemper

#endif  // TRUEMPER_MODEL_HPP
