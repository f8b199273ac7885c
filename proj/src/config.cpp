#include "vacrad/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vacrad {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool valid_double(const std::string& v) {
    char* end = nullptr;
    std::strtod(v.c_str(), &end);
    return end != v.c_str() && *end == '\0';
}

bool valid_int(const std::string& v) {
    char* end = nullptr;
    std::strtoll(v.c_str(), &end, 10);
    return end != v.c_str() && *end == '\0';
}

bool valid_flag(const std::string& v) {
    return v == "true" || v == "false" || v == "0" || v == "1";
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

} // namespace

ConfigMap parse_config(const std::string& text, const ConfigSchema& schema) {
    ConfigMap out;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(line_no, "expected 'key = value'");

        const auto schema_it = schema.find(key);
        if (schema_it == schema.end()) fail(line_no, "unknown key '" + key + "'");
        if (out.count(key)) fail(line_no, "duplicate key '" + key + "'");

        switch (schema_it->second) {
            case ConfigType::Double:
                if (!valid_double(value)) fail(line_no, "key '" + key + "' needs a number, got '" + value + "'");
                break;
            case ConfigType::Int:
                if (!valid_int(value)) fail(line_no, "key '" + key + "' needs an integer, got '" + value + "'");
                break;
            case ConfigType::Flag:
                if (!valid_flag(value)) fail(line_no, "key '" + key + "' needs true/false, got '" + value + "'");
                break;
            case ConfigType::String:
                break;
        }
        out[key] = value;
    }
    return out;
}

ConfigMap load_config(const std::string& path, const ConfigSchema& schema) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str(), schema);
}

double config_double(const ConfigMap& m, const std::string& key) {
    return std::strtod(m.at(key).c_str(), nullptr);
}

long long config_int(const ConfigMap& m, const std::string& key) {
    return std::strtoll(m.at(key).c_str(), nullptr, 10);
}

bool config_flag(const ConfigMap& m, const std::string& key) {
    const std::string& v = m.at(key);
    return v == "true" || v == "1";
}

} // namespace vacrad
