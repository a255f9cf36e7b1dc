#ifndef TRUEMPER_DETECTORS_HPP
#define TRUEMPER_DETECTORS_HPP

#include "truemper/graph.hpp"
#include "truemper/model.hpp"
#include "truemper/witness.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace truemper {

/// Empty string when w is an induced configuration of g of its kind;
/// otherwise a description of the first broken invariant.
std::string witness_violation(const Graph& g, const Witness& w);

inline bool validate_witness(const Graph& g, const Witness& w) { return witness_violation(g, w).empty(); }

/// Thrown when a detector stage notices that its precondition (absence of
/// the configurations handled by earlier stages) does not hold. Carries the
/// configuration that proves it.
class PreconditionViolated : public std::runtime_error {
public:
    PreconditionViolated(const std::string& what, Witness evidence)
        : std::runtime_error(what), evidence_(std::move(evidence)) {}
    const Witness& evidence() const { return evidence_; }

private:
    Witness evidence_;
};

std::optional<Witness> detect_pyramid(const Graph& g);
std::optional<Witness> detect_theta(const Graph& g);

/// Requires g to be pyramid-free and theta-free. Throws PreconditionViolated
/// (with a pyramid) when the search runs into one.
std::optional<Witness> detect_long_prism(const Graph& g);

struct BrokenWheelOptions {
    /// Worker threads for the frame search; 0 reads TRUEMPER_THREADS and
    /// falls back to 1.
    unsigned threads = 1;
};

/// Requires g to be free of pyramids, thetas and long prisms for a negative
/// answer to be trusted; any witness returned is valid regardless.
std::optional<Witness> detect_broken_wheel(const Graph& g, const BrokenWheelOptions& options = {});

/// If g[s] is a broken wheel (for some choice of center), the wheel with the
/// smallest possible center, its rim starting at the rim's smallest vertex
/// and heading towards the smaller of that vertex's two rim neighbours.
std::optional<BrokenWheel> is_broken_wheel(const Graph& g, const VertexSet& s);

/// g[s] as a broken wheel centered at x, with the rim oriented as above.
std::optional<BrokenWheel> broken_wheel_centered_at(const Graph& g, const VertexSet& s, Vertex x);

/// Contracts the witness into a K2,3 induced minor model. Throws
/// std::invalid_argument if the witness is not valid for g.
InducedMinorModel witness_to_model(const Graph& g, const Witness& w);

enum class Stage { Pyramid, Theta, LongPrism, BrokenWheel };

std::string_view to_string(Stage stage);

struct StageTiming {
    Stage stage;
    double milliseconds = 0;
};

struct DetectOptions {
    unsigned threads = 1;
    /// Run a single stage instead of the whole cascade. The stages before it
    /// still run first, because they establish its precondition.
    std::optional<Stage> only_stage;
};

struct DetectionResult {
    bool contains_k23 = false;
    std::optional<Stage> stage;  ///< stage that produced the witness
    std::optional<Witness> witness;
    std::optional<InducedMinorModel> model;
    std::vector<StageTiming> timings;
    /// Single-stage runs only: the witness came from an earlier stage, so the
    /// requested stage's precondition does not hold and it was not run.
    bool precondition_violated = false;
};

/// Pyramid, theta, long prism, broken wheel in turn; the first hit decides.
/// Every positive answer carries a validated witness and model.
DetectionResult detect_k23_induced_minor(const Graph& g, const DetectOptions& options = {});

}  // namespace truemper

#endif  // TRUEMPER_DETECTORS_HPP
