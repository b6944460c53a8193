// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dicke/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "dicke/error.hpp"

namespace dicke::csv {
namespace {

HalfInt parse_half(const std::string& s) {
  const double v = std::stod(s);
  const double twice = std::round(2 * v);
  if (std::abs(2 * v - twice) > 1e-9) throw ParseError("csv: '" + s + "' is not a half-integer");
  return HalfInt::from_twice(static_cast<int>(twice));
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_probabilities(std::ostream& os, const ProbTable& table) {
  os << "j,m,p\n";
  for (const auto& e : table.entries) os << e.j.str() << ',' << e.m.str() << ',' << format_double(e.p) << '\n';
}

void write_counts(std::ostream& os, const ShotCounts& counts) {
  os << "j,m,count\n";
  for (const auto& e : counts.entries) os << e.j.str() << ',' << e.m.str() << ',' << e.count << '\n';
}

void write_husimi(std::ostream& os, const std::vector<HusimiPoint>& grid) {
  os << "theta,phi,q\n";
  for (const auto& p : grid)
    os << format_double(p.theta) << ',' << format_double(p.phi) << ',' << format_double(p.q) << '\n';
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
    os << '\n';
  }
}

ProbTable read_probabilities(std::istream& is) {
  ProbTable t;
  std::string line;
  if (!std::getline(is, line) || line != "j,m,p") throw ParseError("csv: expected header j,m,p");
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) break;
    std::stringstream ss(line);
    std::string j, m, p;
    if (!std::getline(ss, j, ',') || !std::getline(ss, m, ',') || !std::getline(ss, p)) {
      throw ParseError("csv: malformed row", lineno, 1);
    }
    double pv = 0;
    const auto res = std::from_chars(p.data(), p.data() + p.size(), pv);
    if (res.ec != std::errc()) throw ParseError("csv: bad probability", lineno, 1);
    t.entries.push_back({parse_half(j), parse_half(m), pv});
  }
  return t;
}

}  // namespace dicke::csv
