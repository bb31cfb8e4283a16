#include "dsneg/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dsneg/errors.hpp"

namespace dsneg {

using nlohmann::json;

double round_for_output(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return std::strtod(buffer, nullptr);
}

namespace {

Frame frame_from_json(const json& j) {
    if (!j.contains("frame") || !j["frame"].is_array()) {
        throw SchemaError("document needs a \"frame\" array");
    }
    std::vector<std::string> labels;
    labels.reserve(j["frame"].size());
    for (const auto& item : j["frame"]) {
        if (!item.is_string()) {
            throw SchemaError("frame labels must be strings");
        }
        labels.push_back(item.get<std::string>());
    }
    return Frame(std::move(labels));
}

BeliefStructure structure_from_json(const Frame& frame, const json& masses) {
    if (!masses.is_array()) {
        throw SchemaError("\"masses\" must be an array");
    }
    std::vector<std::pair<FocalSet, double>> entries;
    entries.reserve(masses.size());
    for (const auto& entry : masses) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("mass") ||
            !entry["set"].is_array() || !entry["mass"].is_number()) {
            throw SchemaError("each masses entry needs a \"set\" array and a numeric \"mass\"");
        }
        std::vector<std::string> members;
        members.reserve(entry["set"].size());
        for (const auto& member : entry["set"]) {
            if (!member.is_string()) {
                throw SchemaError("set members must be strings");
            }
            members.push_back(member.get<std::string>());
        }
        entries.emplace_back(frame.subset(members), entry["mass"].get<double>());
    }
    return BeliefStructure(frame, entries);
}

ProbabilityDistribution distribution_from_json(const Frame& frame, const json& probs) {
    if (!probs.is_array()) {
        throw SchemaError("\"probs\" must be an array");
    }
    std::vector<double> values;
    values.reserve(probs.size());
    for (const auto& item : probs) {
        if (!item.is_number()) {
            throw SchemaError("probs entries must be numbers");
        }
        values.push_back(item.get<double>());
    }
    return ProbabilityDistribution(frame, std::move(values));
}

}  // namespace

Document document_from_json(const json& j) {
    if (!j.is_object()) {
        throw SchemaError("document must be a JSON object");
    }
    const bool has_masses = j.contains("masses");
    const bool has_probs = j.contains("probs");
    if (has_masses == has_probs) {
        throw SchemaError("document needs exactly one of \"masses\" or \"probs\"");
    }
    Frame frame = frame_from_json(j);
    if (has_masses) {
        return structure_from_json(frame, j["masses"]);
    }
    return distribution_from_json(frame, j["probs"]);
}

Document load_document(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(e.what());
    }
    return document_from_json(j);
}

Document load_document(const std::string& path) {
    if (path == "-") {
        return load_document(std::cin);
    }
    std::ifstream file(path);
    if (!file) {
        throw SchemaError("cannot read \"" + path + "\"");
    }
    return load_document(file);
}

json to_json(const BeliefStructure& m) {
    json masses = json::array();
    for (const auto& [set, mass] : m.entries()) {
        masses.push_back({{"set", set.member_labels()}, {"mass", round_for_output(mass)}});
    }
    return {{"frame", m.frame().labels()}, {"masses", std::move(masses)}};
}

json to_json(const ProbabilityDistribution& p) {
    json probs = json::array();
    for (double x : p.probs()) {
        probs.push_back(round_for_output(x));
    }
    return {{"frame", p.frame().labels()}, {"probs", std::move(probs)}};
}

}  // namespace dsneg
