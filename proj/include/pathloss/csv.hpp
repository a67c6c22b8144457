#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pathloss::csv {

// Splits one CSV line on commas. Fields are plain (no quoting in any of the
// formats this tool reads or writes); a trailing '\r' is stripped.
inline std::vector<std::string> split_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

inline bool read_line(std::istream& in, std::string& line) {
    return static_cast<bool>(std::getline(in, line));
}

inline void write_row(std::ostream& out, const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ',';
        out << f[i];
    }
    out << '\n';
}

// Shortest representation that round-trips a double through parsing.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

}  // namespace pathloss::csv
