#include "vacrad/table.hpp"

#include <stdexcept>

namespace vacrad {

void SpectrumTable::validate() const {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("SpectrumTable: grid must be strictly increasing");
    if (value_names.size() != values.size())
        throw std::invalid_argument("SpectrumTable: one name per value column required");
    for (const auto& col : values)
        if (col.size() != grid.size())
            throw std::invalid_argument("SpectrumTable: value column length must match grid");
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + i * step;
    out.back() = b;
    return out;
}

std::vector<double> map_grid(const std::vector<double>& grid,
                             const std::function<double(double)>& f, Exec exec) {
    std::vector<double> out(grid.size());
    for_each_index(exec, static_cast<std::ptrdiff_t>(grid.size()),
                   [&](std::ptrdiff_t i) { out[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]); });
    return out;
}

SpectrumTable make_table(std::string grid_name, std::vector<double> grid,
                         std::vector<std::string> value_names,
                         const std::vector<std::function<double(double)>>& fns,
                         std::string units, Exec exec) {
    SpectrumTable t;
    t.grid_name = std::move(grid_name);
    t.grid = std::move(grid);
    t.value_names = std::move(value_names);
    t.units = std::move(units);
    for (const auto& f : fns) t.values.push_back(map_grid(t.grid, f, exec));
    t.validate();
    return t;
}

} // namespace vacrad
