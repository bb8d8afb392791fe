#pragma once

#include <iosfwd>
#include <string>

#include "sgevp/problems.hpp"

namespace sgevp {

/// "label idx:val ..." lines with 1-based indices. d <= 0 infers the dimension from the
/// largest index seen. Labels > 0 map to +1, the rest to -1.
Dataset load_libsvm(const std::string& path, Index d = 0);
Dataset parse_libsvm(std::istream& in, Index d = 0, const std::string& name = "libsvm");

/// Comma-separated with one header row. With `labeled` the last column holds labels.
Dataset load_csv(const std::string& path, bool labeled);
Dataset parse_csv(std::istream& in, bool labeled, const std::string& name = "csv");

/// Header x1..xd (plus "label" when labels exist); shortest round-trip number format.
void write_csv(std::ostream& out, const Dataset& data);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace sgevp
