#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace djc {

/// Formats with 17 significant digits (%.16e): enough to round-trip any
/// double exactly, and stable across runs for byte-identical outputs.
std::string format_double(double value);

/// Ordered key=value pairs echoed as leading '# key=value' comment lines.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// One time-series curve ready for CSV: header `t,gt,concurrence` after the
/// metadata comments, one row per grid point in time order.
struct ScanTable {
    Metadata meta;
    std::vector<double> t;
    std::vector<double> gt;  ///< dimensionless axis, g_ref * t
    std::vector<double> concurrence;
};

/// Writes metadata comments, the fixed header, and the rows. Throws
/// std::invalid_argument on mismatched column lengths.
void write_scan_csv(std::ostream& out, const ScanTable& table);

/// Parses what write_scan_csv produced (metadata lines optional). Throws
/// std::runtime_error on malformed rows or a wrong header.
ScanTable read_scan_csv(std::istream& in);

}  // namespace djc
