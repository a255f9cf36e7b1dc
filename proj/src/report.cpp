#include "truemper/report.hpp"

#include <stdexcept>

namespace truemper {

using nlohmann::json;

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const Graph& g, const Witness& w) {
    json j;
    j["kind"] = std::string(to_string(kind_of(w)));
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Theta>) {
                j["hubs"] = {c.hub1, c.hub2};
                j["paths"] = c.paths;
            } else if constexpr (std::is_same_v<T, Pyramid>) {
                j["apex"] = c.apex;
                j["triangle"] = c.triangle;
                j["paths"] = c.paths;
            } else if constexpr (std::is_same_v<T, LongPrism>) {
                j["top"] = c.top;
                j["bottom"] = c.bottom;
                j["paths"] = c.paths;
            } else {
                j["center"] = c.center;
                j["rim"] = c.rim;
                j["sectors"] = sector_lengths(g, c);
            }
        },
        w);
    return j;
}

json to_json(const InducedMinorModel& m) {
    return {{"u", to_json(m.u)}, {"v", to_json(m.v)}, {"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}};
}

Witness witness_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        auto paths = [&] { return j.at("paths").get<std::array<Path, 3>>(); };
        if (kind == "theta") {
            const auto hubs = j.at("hubs").get<std::array<Vertex, 2>>();
            return Theta{hubs[0], hubs[1], paths()};
        }
        if (kind == "pyramid") return Pyramid{j.at("apex").get<Vertex>(), j.at("triangle").get<std::array<Vertex, 3>>(), paths()};
        if (kind == "long-prism")
            return LongPrism{j.at("top").get<std::array<Vertex, 3>>(), j.at("bottom").get<std::array<Vertex, 3>>(), paths()};
        if (kind == "broken-wheel") return BrokenWheel{j.at("rim").get<std::vector<Vertex>>(), j.at("center").get<Vertex>()};
        throw std::invalid_argument("unknown witness kind " + kind);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed witness: ") + e.what());
    }
}

json detection_report(const std::string& input, const Graph& g, const DetectionResult& r, const ReportOptions& options) {
    json j;
    j["schema"] = kDetectSchema;
    j["input"] = input;
    j["vertices"] = g.order();
    j["edges"] = g.size();
    j["contains_k23"] = r.contains_k23;
    j["stage"] = r.stage ? std::string(to_string(*r.stage)) : std::string("none");
    if (options.scope) {
        j["scope"] = std::string(to_string(*options.scope));
        j["precondition_violated"] = r.precondition_violated;
    }
    if (r.contains_k23 && options.witness && r.witness) j["witness"] = to_json(g, *r.witness);
    if (r.contains_k23 && options.model && r.model) j["model"] = to_json(*r.model);
    if (options.timings) {
        json t = json::object();
        for (const auto& s : r.timings) t[std::string(to_string(s.stage))] = s.milliseconds;
        j["timings_ms"] = t;
    }
    return j;
}

}  // namespace truemper
