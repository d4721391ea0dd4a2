#include "locol/json_io.hpp"

#include "locol/error.hpp"

namespace locol {

Json to_json(const Coloring& c) {
    Json j;
    j["k"] = c.k();
    j["colors"] = c.colors();
    return j;
}

Coloring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colors")) {
        throw ParseError(0, "coloring JSON needs \"k\" and \"colors\"");
    }
    if (!j["k"].is_number_integer() || !j["colors"].is_array()) {
        throw ParseError(0, "coloring JSON has the wrong field types");
    }
    std::vector<Color> colors;
    for (const auto& c : j["colors"]) {
        if (!c.is_number_integer()) throw ParseError(0, "colors must be integers");
        colors.push_back(c.get<int>());
    }
    return Coloring(j["k"].get<int>(), std::move(colors));
}

Coloring parse_coloring(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    return coloring_from_json(j);
}

Json to_json(const CoronaMap& map) {
    Json centers = Json::array();
    Json satellites = Json::array();
    for (Vertex p = 0; p < map.product_order(); ++p) {
        const auto& label = map.label(p);
        if (std::holds_alternative<CenterLabel>(label)) {
            centers.push_back(p);
        } else {
            const auto& s = std::get<SatelliteLabel>(label);
            Json entry;
            entry["g"] = s.g;
            entry["t"] = s.component;
            entry["h"] = s.h;
            entry["idx"] = p;
            satellites.push_back(std::move(entry));
        }
    }
    Json j;
    j["centers"] = std::move(centers);
    j["satellites"] = std::move(satellites);
    return j;
}

Json to_json(const ColorCodeMatrix& codes) {
    Json rows = Json::array();
    for (Vertex v = 0; v < codes.order(); ++v) {
        auto code = codes.code(v);
        rows.push_back(std::vector<int>(code.begin(), code.end()));
    }
    return rows;
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["verdict"] = {{"proper", report.proper}, {"locating", report.locating}};
    if (!report.witness) {
        j["witness"] = nullptr;
    } else if (const auto* e = std::get_if<MonochromaticEdge>(&*report.witness)) {
        j["witness"] = {{"kind", "monochromatic-edge"}, {"u", e->u}, {"v", e->v}, {"color", e->color}};
    } else {
        const auto& c = std::get<CodeCollision>(*report.witness);
        j["witness"] = {{"kind", "code-collision"}, {"u", c.u}, {"v", c.v}, {"code", c.code}};
    }
    return j;
}

Json to_json(const BoundsReport& report) {
    Json tags = Json::array();
    for (const auto& e : report.evidence) {
        tags.push_back({{"tag", to_string(e.bound.tag)},
                        {"side", e.side == BoundSide::kLower ? "lower" : "upper"},
                        {"value", e.bound.value}});
    }
    Json j;
    j["lower"] = report.lower.value;
    j["upper"] = report.upper.value;
    j["binding"] = {{"lower", to_string(report.lower.tag)}, {"upper", to_string(report.upper.tag)}};
    j["tags"] = std::move(tags);
    j["indeterminate"] = report.indeterminate;
    return j;
}

Json to_json(const ConstructionResult& result) {
    Json j;
    j["source"] = result.source;
    j["k"] = result.colors_used;
    j["colors"] = result.coloring.colors();
    j["verified"] = result.verified;
    return j;
}

Json to_json(const ChiResult& result) {
    Json j;
    if (result.resolved) {
        j["status"] = "resolved";
        j["value"] = result.value;
        j["certificate"] = to_json(*result.certificate);
    } else {
        j["status"] = "indeterminate";
        j["lower"] = result.lower;
        j["upper"] = result.upper;
    }
    j["nodes"] = result.nodes;
    return j;
}

}  // namespace locol
