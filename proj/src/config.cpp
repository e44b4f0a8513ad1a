#include "relcode/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace relcode {

namespace {

double require_number(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number()) {
        throw InvalidParameter(std::string("config field '") + key + "' missing or not a number");
    }
    return doc[key].get<double>();
}

} // namespace

LoadedConfig parse_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidParameter("config must be a JSON object");
    }

    if (!doc.contains("durations") || !doc["durations"].is_array() || doc["durations"].empty()) {
        throw InvalidParameter("config field 'durations' must be a nonempty array");
    }
    std::vector<double> durations;
    for (const auto& item : doc["durations"]) {
        if (!item.is_number()) {
            throw InvalidParameter("durations must be numbers");
        }
        durations.push_back(item.get<double>());
    }
    Codebook codebook(std::move(durations));

    const bool has_beta = doc.contains("beta");
    const bool has_mean = doc.contains("mean_tau");
    if (has_beta == has_mean) {
        throw InvalidParameter("exactly one of 'beta' / 'mean_tau' must be present");
    }
    const double power = require_number(doc, "power");
    const double c = require_number(doc, "c");

    EncodingModel model =
        has_beta ? EncodingModel(std::move(codebook), require_number(doc, "beta"), power, c)
                 : EncodingModel::with_mean_duration(std::move(codebook),
                                                     require_number(doc, "mean_tau"), power, c);

    LoadedConfig config{std::move(model)};
    if (doc.contains("v0")) {
        config.v0 = require_number(doc, "v0");
    }
    if (doc.contains("jitter_sigma")) {
        config.jitter_sigma = require_number(doc, "jitter_sigma");
    }
    return config;
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameter("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace relcode
