#include "djc/scan_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace djc {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

static const char* kHeader = "t,gt,concurrence";

void write_scan_csv(std::ostream& out, const ScanTable& table) {
    const std::size_t rows = table.t.size();
    if (table.gt.size() != rows || table.concurrence.size() != rows)
        throw std::invalid_argument("write_scan_csv: column lengths differ");
    for (const auto& [key, value] : table.meta)
        out << "# " << key << '=' << value << '\n';
    out << kHeader << '\n';
    for (std::size_t i = 0; i < rows; ++i)
        out << format_double(table.t[i]) << ',' << format_double(table.gt[i])
            << ',' << format_double(table.concurrence[i]) << '\n';
}

namespace {

double parse_field(const std::string& line, std::size_t begin, std::size_t end) {
    double v;
    const auto res = std::from_chars(line.data() + begin, line.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != line.data() + end)
        throw std::runtime_error("scan csv: malformed number in '" + line + "'");
    return v;
}

}  // namespace

ScanTable read_scan_csv(std::istream& in) {
    ScanTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.find_first_not_of(" \t", 1);
            if (start == std::string::npos) continue;
            const std::size_t eq = line.find('=', start);
            if (eq == std::string::npos)
                table.meta.emplace_back(line.substr(start), "");
            else
                table.meta.emplace_back(line.substr(start, eq - start),
                                        line.substr(eq + 1));
            continue;
        }
        if (!header_seen) {
            if (line != kHeader)
                throw std::runtime_error("scan csv: expected header '" +
                                         std::string(kHeader) + "', got '" +
                                         line + "'");
            header_seen = true;
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                       : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
            throw std::runtime_error("scan csv: expected 3 columns in '" + line +
                                     "'");
        table.t.push_back(parse_field(line, 0, c1));
        table.gt.push_back(parse_field(line, c1 + 1, c2));
        table.concurrence.push_back(parse_field(line, c2 + 1, line.size()));
    }
    if (!header_seen) throw std::runtime_error("scan csv: missing header row");
    return table;
}

}  // namespace djc
