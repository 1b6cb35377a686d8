#include "fraclab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fraclab/errors.hpp"

namespace fraclab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

const std::vector<double>& Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return columns[i];
    throw ConfigError("table has no column named '" + name + "'");
}

void write_table(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << (i ? "," : "") << table.header[i];
    os << "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            os << (c ? "," : "") << format_double(table.columns[c][r]);
        os << "\n";
    }
}

Table read_table(std::istream& is) {
    Table table;
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);
    table.columns.assign(table.header.size(), {});

    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            if (c >= table.columns.size())
                throw ConfigError("csv: too many cells on line " + std::to_string(lineno));
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
                throw ConfigError("csv: bad number '" + cell + "' on line " +
                                  std::to_string(lineno));
            table.columns[c++].push_back(v);
        }
        if (c != table.columns.size())
            throw ConfigError("csv: too few cells on line " + std::to_string(lineno));
    }
    return table;
}

Table read_table_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open '" + path + "'");
    return read_table(is);
}

void write_table_file(const std::string& path, const Table& table) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write '" + path + "'");
    write_table(os, table);
}

}  // namespace fraclab
