#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spikesweep/experiment.hpp"

namespace spikesweep {

enum class ConfigErrorKind { syntax, unknown_section, unknown_key, bad_value, invariant };

std::string_view to_string(ConfigErrorKind k);

struct ConfigError : std::runtime_error {
    ConfigError(ConfigErrorKind kind, int line, int column, const std::string& message);

    ConfigErrorKind kind;
    int line;
    int column;
};

/// Sectioned key = value grammar:
///
///   [section]
///   key = value      # trailing comments allowed
///
/// Lists are comma separated, weight ranges are lo:hi. Missing keys keep
/// their defaults, so an empty document yields SweepConfig{}.
SweepConfig parse_config(std::string_view text);

/// Inverse of parse_config; writes every key.
std::string serialize_config(const SweepConfig& config);

} // namespace spikesweep
