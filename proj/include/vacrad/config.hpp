#ifndef VACRAD_CONFIG_HPP
#define VACRAD_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace vacrad {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ConfigType { Double, Int, String, Flag };

/// key -> expected value type
using ConfigSchema = std::map<std::string, ConfigType>;
using ConfigMap = std::map<std::string, std::string>;

/// Parse "key = value" lines; '#' starts a comment, blank lines are
/// ignored. Unknown keys, repeated keys, malformed lines and values that do
/// not match the schema type all raise ConfigError naming the line number.
ConfigMap parse_config(const std::string& text, const ConfigSchema& schema);

/// parse_config over the contents of path; missing file is a ConfigError.
ConfigMap load_config(const std::string& path, const ConfigSchema& schema);

/// Converters for values already validated by parse_config.
double config_double(const ConfigMap& m, const std::string& key);
long long config_int(const ConfigMap& m, const std::string& key);
bool config_flag(const ConfigMap& m, const std::string& key);

} // namespace vacrad

#endif
