#include "vacrad/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vacrad {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string table_to_csv(const SpectrumTable& table) {
    table.validate();
    std::string out = "# units: " + table.units + "\n" + table.grid_name;
    for (const auto& name : table.value_names) out += "," + name;
    out += "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        out += format_double(table.grid[r]);
        for (const auto& col : table.values) out += "," + format_double(col[r]);
        out += "\n";
    }
    return out;
}

void write_table(const SpectrumTable& table, const std::string& path) {
    write_text_file(table_to_csv(table), path);
}

std::string named_values_to_csv(const std::string& units,
                                const std::vector<std::pair<std::string, double>>& rows) {
    std::string out = "# units: " + units + "\nquantity,value\n";
    for (const auto& [name, value] : rows) out += name + "," + format_double(value) + "\n";
    return out;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream f(path, std::ios::binary); // binary: LF endings everywhere
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace vacrad
