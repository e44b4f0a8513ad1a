#pragma once

#include <string>

#include "relcode/codebook.hpp"

namespace relcode {

// Parsed model configuration document:
//   {"durations": [..], "beta": <num> | "mean_tau": <num>,
//    "power": <num>, "c": <num>, "v0": <num opt>, "jitter_sigma": <num opt>}
// Exactly one of beta / mean_tau must be present; mean_tau solves for beta.
struct LoadedConfig {
    EncodingModel model;
    double v0 = 0.0;
    double jitter_sigma = 0.0;
};

/// Parses a config from a JSON string. InvalidParameter on malformed input.
LoadedConfig parse_config(const std::string& json_text);

/// Reads and parses a config file.
LoadedConfig load_config(const std::string& path);

} // namespace relcode
