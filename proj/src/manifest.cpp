#include "vacrad/manifest.hpp"

#include <ctime>

#include <nlohmann/json.hpp>

namespace vacrad {

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["tool_version"] = tool_version;
    if (seed) j["seed"] = *seed;
    j["timestamp"] = timestamp;
    if (!outputs.empty()) j["outputs"] = outputs;
    if (!results.empty()) {
        nlohmann::ordered_json res;
        for (const auto& [name, value] : results) res[name] = value; // shortest round-trip form
        j["results"] = res;
    }
    if (workers) j["workers"] = *workers;
    return j.dump(2) + "\n";
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

} // namespace vacrad
