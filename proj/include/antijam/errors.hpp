#pragma once

#include <stdexcept>
#include <string>

namespace antijam {

// Invalid SimConfig / CLI / config-file input. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class MetricsError : public std::runtime_error {
public:
    explicit MetricsError(const std::string& what) : std::runtime_error(what) {}
};

// Requested a metric the trace cannot support (e.g. cumulative-probability
// metrics on a DCF trace, which carries no cumulative_p column).
class UnsupportedMetricError : public MetricsError {
public:
    explicit UnsupportedMetricError(const std::string& what) : MetricsError(what) {}
};

} // namespace antijam
