#pragma once

#include <string>

#include "mwi/config.hpp"

namespace mwi {

/// Parses a scenario file (JSON, // comments allowed) into a raw
/// ExperimentConfig. Unknown keys anywhere in the tree are a hard error
/// (ConfigError), as is a missing file or malformed JSON. All quantities SI.
ExperimentConfig load_scenario(const std::string& path);

/// Same, from an in-memory JSON string.
ExperimentConfig parse_scenario(const std::string& text);

} // namespace mwi
