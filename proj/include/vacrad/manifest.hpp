#ifndef VACRAD_MANIFEST_HPP
#define VACRAD_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace vacrad {

/// Reproducibility record written next to every data file: the command,
/// every physics parameter the computation consumed, tool version, seed
/// (when randomness was involved) and a UTC timestamp. The timestamp lives
/// here, never in the CSV, so data files stay byte-reproducible.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string tool_version;
    std::optional<std::int64_t> seed;
    std::string timestamp; // ISO-8601, UTC
    std::map<std::string, std::string> outputs;
    std::map<std::string, double> results;
    std::optional<int> workers;

    std::string to_json() const;
};

std::string iso8601_utc_now();

} // namespace vacrad

#endif
