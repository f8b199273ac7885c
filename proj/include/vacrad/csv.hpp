#ifndef VACRAD_CSV_HPP
#define VACRAD_CSV_HPP

#include <string>
#include <utility>
#include <vector>

#include "vacrad/table.hpp"

namespace vacrad {

/// "%.17g" rendering: enough digits for an exact double round-trip.
std::string format_double(double v);

/// Table serialized to CSV text: a "# units:" line, a header row, then data
/// rows with 17 significant digits and LF line endings.
std::string table_to_csv(const SpectrumTable& table);

/// Write table_to_csv(table) to path; throws std::runtime_error on IO
/// failure.
void write_table(const SpectrumTable& table, const std::string& path);

/// Scalar results as a two-column quantity,value CSV with the same framing
/// as table_to_csv.
std::string named_values_to_csv(const std::string& units,
                                const std::vector<std::pair<std::string, double>>& rows);

void write_text_file(const std::string& text, const std::string& path);

} // namespace vacrad

#endif
