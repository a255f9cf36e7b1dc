#ifndef TRUEMPER_REPORT_HPP
#define TRUEMPER_REPORT_HPP

#include "truemper/detectors.hpp"
#include "truemper/model.hpp"
#include "truemper/oracle.hpp"
#include "truemper/witness.hpp"

#include <json.hpp>

#include <string>

namespace truemper {

inline constexpr const char* kDetectSchema = "truemper.detect/1";
inline constexpr const char* kOracleSchema = "truemper.oracle/1";
inline constexpr const char* kXcheckSchema = "truemper.xcheck/1";
inline constexpr const char* kBenchSchema = "truemper.bench/1";

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const Graph& g, const Witness& w);
nlohmann::json to_json(const InducedMinorModel& m);

/// Reads a witness back from its report form. Throws std::invalid_argument
/// on malformed input.
Witness witness_from_json(const nlohmann::json& j);

struct ReportOptions {
    bool witness = true;
    bool model = true;
    bool timings = true;
    /// Set for single-stage runs; adds "scope" and "precondition_violated".
    std::optional<Stage> scope;
};

nlohmann::json detection_report(const std::string& input, const Graph& g, const DetectionResult& r,
                                 const ReportOptions& options);

}  // namespace truemper

#endif  // TRUEMPER_REPORT_HPP
