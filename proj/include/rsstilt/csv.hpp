#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "rsstilt/core.hpp"
#include "rsstilt/error.hpp"
#include "rsstilt/sampling.hpp"

namespace rsstilt::csv {

// 17 significant digits round-trip every double exactly.
inline std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_double(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw error(error_kind::parse_error, "line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

inline long parse_int(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw error(error_kind::parse_error, "line " + std::to_string(line) + ": bad integer '" + std::string(text) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Data lines of a CSV with the given header; '#' comment lines and blank
// lines are skipped. Each entry keeps its 1-based line number.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> read_table(std::istream& in,
                                                                               std::string_view header) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string line;
  std::size_t number = 0;
  bool seen_header = false;
  const std::size_t columns = split(header).size();
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      std::string compact;
      for (char c : line) {
        if (c != ' ' && c != '\t') compact.push_back(c);
      }
      if (compact != header) {
        throw error(error_kind::parse_error, "line " + std::to_string(number) + ": expected header '" +
                                                 std::string(header) + "'");
      }
      seen_header = true;
      continue;
    }
    auto fields = split(line);
    if (fields.size() != columns) {
      throw error(error_kind::parse_error, "line " + std::to_string(number) + ": expected " + std::to_string(columns) +
                                               " fields");
    }
    rows.emplace_back(number, std::vector<std::string>(fields.begin(), fields.end()));
  }
  if (!seen_header) throw error(error_kind::parse_error, "missing header '" + std::string(header) + "'");
  return rows;
}

// `rank,value` rows; ranks are 1-based and every rank 1..k must occur.
// Within a rank, file order is measurement order.
inline UrssSample read_urss(std::istream& in) {
  std::map<long, std::vector<double>> by_rank;
  for (const auto& [line, f] : read_table(in, "rank,value")) {
    const long rank = parse_int(f[0], line);
    if (rank < 1) throw error(error_kind::parse_error, "line " + std::to_string(line) + ": ranks start at 1");
    const double v = parse_double(f[1], line);
    if (!std::isfinite(v)) throw error(error_kind::invalid_sample, "line " + std::to_string(line) + ": non-finite value");
    by_rank[rank].push_back(v);
  }
  if (by_rank.empty()) throw error(error_kind::invalid_sample, "no observations");
  const long k = by_rank.rbegin()->first;
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(k));
  for (long r = 1; r <= k; ++r) {
    auto it = by_rank.find(r);
    if (it == by_rank.end()) throw error(error_kind::invalid_design, "rank " + std::to_string(r) + " has no observations");
    rows[static_cast<std::size_t>(r - 1)] = std::move(it->second);
  }
  return UrssSample(std::move(rows));
}

inline void write_urss(std::ostream& out, const UrssSample& sample) {
  out << "rank,value\n";
  for (std::size_t r = 0; r < sample.k(); ++r) {
    for (double x : sample.row(r)) out << (r + 1) << ',' << format(x) << '\n';
  }
}

inline std::vector<PopulationRecord> read_population(std::istream& in) {
  std::vector<PopulationRecord> out;
  for (const auto& [line, f] : read_table(in, "y,concomitant")) {
    out.push_back({parse_double(f[0], line), parse_double(f[1], line)});
  }
  return out;
}

}  // namespace rsstilt::csv
