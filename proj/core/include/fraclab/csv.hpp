#ifndef FRACLAB_CSV_HPP
#define FRACLAB_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fraclab {

/** Locale-independent decimal formatting with 17 significant digits. */
std::string format_double(double v);

/** Rectangular numeric table with a one-line header. */
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(const std::string& name) const;
    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

void write_table(std::ostream& os, const Table& table);
Table read_table(std::istream& is);
Table read_table_file(const std::string& path);
void write_table_file(const std::string& path, const Table& table);

}  // namespace fraclab

#endif
