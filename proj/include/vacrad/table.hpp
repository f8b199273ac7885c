#ifndef VACRAD_TABLE_HPP
#define VACRAD_TABLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "vacrad/exec.hpp"

namespace vacrad {

/// Sampled 1-D spectrum: a strictly increasing grid (theta or x), one value
/// column per requested quantity, and a tag naming the dimensional
/// prefactor the reduced values must be multiplied by.
struct SpectrumTable {
    std::string grid_name;
    std::vector<double> grid;
    std::vector<std::string> value_names;
    std::vector<std::vector<double>> values; // one vector per value column
    std::string units;

    void validate() const; // throws std::invalid_argument on shape violations
    std::size_t rows() const { return grid.size(); }
};

/// n points from a to b inclusive (n >= 2), endpoints exact.
std::vector<double> linspace(double a, double b, int n);

/// Evaluate f over the grid into a value column; parallelizable, output
/// ordering fixed by the grid.
std::vector<double> map_grid(const std::vector<double>& grid,
                             const std::function<double(double)>& f,
                             Exec exec = Exec::Serial);

/// Table with columns f_k(grid_i).
SpectrumTable make_table(std::string grid_name, std::vector<double> grid,
                         std::vector<std::string> value_names,
                         const std::vector<std::function<double(double)>>& fns,
                         std::string units, Exec exec = Exec::Serial);

} // namespace vacrad

#endif
