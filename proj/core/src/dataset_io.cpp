#include "sgevp/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "sgevp/error.hpp"

namespace sgevp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& what, std::size_t line) {
  throw Error(Errc::ParseError, what + " on line " + std::to_string(line),
              std::numeric_limits<double>::quiet_NaN(), line);
}

double to_double(std::string_view tok, std::size_t line) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    parse_error("malformed number '" + std::string(tok) + "'", line);
  if (!std::isfinite(v)) parse_error("non-finite value", line);
  return v;
}

long long to_index(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    parse_error("malformed index '" + std::string(tok) + "'", line);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  return in;
}

double label_of(double raw) { return raw > 0.0 ? 1.0 : -1.0; }

}  // namespace

Dataset parse_libsvm(std::istream& in, Index d, const std::string& name) {
  struct Row {
    double label = 0.0;
    std::vector<std::pair<Index, double>> entries;
  };
  std::vector<Row> rows;
  Index max_index = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = trim(s.substr(0, hash));
    if (s.empty()) continue;
    Row row;
    bool first = true;
    for (std::string_view tok : split(s, ' ')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      if (first) {
        row.label = label_of(to_double(tok, line));
        first = false;
        continue;
      }
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) parse_error("expected idx:val, got '" + std::string(tok) + "'", line);
      const long long idx = to_index(tok.substr(0, colon), line);
      if (idx < 1) parse_error("indices are 1-based", line);
      if (d > 0 && idx > d) parse_error("index exceeds the dimension", line);
      row.entries.emplace_back(static_cast<Index>(idx - 1), to_double(tok.substr(colon + 1), line));
      max_index = std::max<Index>(max_index, static_cast<Index>(idx));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::EmptyFile, "no samples in " + name);
  const Index dim = d > 0 ? d : max_index;
  if (dim < 1) throw Error(Errc::EmptyFile, "no features in " + name);

  Dataset data;
  data.name = name;
  data.X = Matrix::Zero(static_cast<Index>(rows.size()), dim);
  Vector y(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    y(static_cast<Index>(i)) = rows[i].label;
    for (const auto& [j, v] : rows[i].entries) data.X(static_cast<Index>(i), j) = v;
  }
  data.y = std::move(y);
  return data;
}

Dataset load_libsvm(const std::string& path, Index d) {
  std::ifstream in = open(path);
  return parse_libsvm(in, d, path);
}

Dataset parse_csv(std::istream& in, bool labeled, const std::string& name) {
  std::string raw;
  std::size_t line = 0;
  std::size_t columns = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    columns = split(s, ',').size();
    break;
  }
  if (columns == 0) throw Error(Errc::EmptyFile, "missing header in " + name);
  if (labeled && columns < 2) parse_error("a labeled file needs at least two columns", line);

  std::vector<std::vector<double>> rows;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    const std::vector<std::string_view> fields = split(s, ',');
    if (fields.size() != columns)
      parse_error("expected " + std::to_string(columns) + " fields, got " + std::to_string(fields.size()), line);
    std::vector<double> row;
    row.reserve(columns);
    for (std::string_view f : fields) row.push_back(to_double(f, line));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::EmptyFile, "no samples in " + name);

  const Index m = static_cast<Index>(rows.size());
  const Index d = static_cast<Index>(labeled ? columns - 1 : columns);
  Dataset data;
  data.name = name;
  data.X.resize(m, d);
  Vector y(m);
  for (Index i = 0; i < m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (Index j = 0; j < d; ++j) data.X(i, j) = row[static_cast<std::size_t>(j)];
    if (labeled) y(i) = label_of(row.back());
  }
  if (labeled) data.y = std::move(y);
  return data;
}

Dataset load_csv(const std::string& path, bool labeled) {
  std::ifstream in = open(path);
  return parse_csv(in, labeled, path);
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const Index d = data.X.cols();
  for (Index j = 0; j < d; ++j) out << (j ? "," : "") << 'x' << (j + 1);
  if (data.y) out << ",label";
  out << '\n';
  for (Index i = 0; i < data.X.rows(); ++i) {
    for (Index j = 0; j < d; ++j) out << (j ? "," : "") << format_double(data.X(i, j));
    if (data.y) out << ',' << format_double((*data.y)(i));
    out << '\n';
  }
}

}  // namespace sgevp
