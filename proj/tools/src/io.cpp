#include "io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace warpmean::cli {

namespace {

double parse_value(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse value '" +
                             field + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Dataset load_ucr(const std::filesystem::path& path, bool label_first) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  Dataset d;
  char sep = '\0';
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const bool has_tab = line.find('\t') != std::string::npos;
    const bool has_comma = line.find(',') != std::string::npos;
    if (sep == '\0') {
      if (has_tab && has_comma) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": mixed tab and comma separators");
      }
      sep = has_tab ? '\t' : ',';
    }
    if ((sep == '\t' && has_comma) || (sep == ',' && has_tab)) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": separator differs from the rest of the file");
    }

    const auto fields = split(line, sep);
    const std::size_t first_value = label_first ? 1 : 0;
    if (fields.size() < first_value + 2) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": a series needs at least 2 values");
    }

    TimeSeries s;
    s.values.reserve(fields.size() - first_value);
    for (std::size_t i = first_value; i < fields.size(); ++i) {
      s.values.push_back(parse_value(trim(fields[i]), line_no));
    }
    d.series.push_back(std::move(s));
    if (label_first) d.labels.push_back(trim(fields[0]));
  }

  if (d.series.empty()) throw std::runtime_error(path.string() + " contains no series");
  return d;
}

void save_ucr(const std::filesystem::path& path, const Dataset& d, char separator) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(std::numeric_limits<double>::max_digits10);

  for (std::size_t i = 0; i < d.series.size(); ++i) {
    if (!d.labels.empty()) out << d.labels[i] << separator;
    const auto& s = d.series[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) out << separator;
      out << s[j];
    }
    out << '\n';
  }
}

void save_series_csv(const std::filesystem::path& path, const TimeSeries& s,
                     const std::vector<std::string>& metadata) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(std::numeric_limits<double>::max_digits10);

  for (const auto& line : metadata) out << "# " << line << '\n';
  for (std::size_t j = 0; j < s.size(); ++j) out << (j ? ",s" : "s") << j;
  out << '\n';
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) out << ',';
    out << s[j];
  }
  out << '\n';
}

TimeSeries load_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  TimeSeries s;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column-name row
      continue;
    }
    for (const auto& f : split(line, ',')) s.values.push_back(parse_value(trim(f), line_no));
    break;
  }
  if (s.values.empty()) throw std::runtime_error(path.string() + ": no data row");
  return s;
}

}  // namespace warpmean::cli
