// Copyright 2026 The bscap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bscap/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "bscap/config.hpp"

namespace bscap {
namespace {

double to_double(const std::string& field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("not a number in CSV: '" + field + "'");
  }
  return v;
}

bool close(double expected, double actual, double rel_tol) {
  return std::fabs(expected - actual) <= rel_tol * std::max(std::fabs(expected), 1e-300);
}

// dB-valued columns are compared on an absolute scale: 9 digits of a value
// near zero carry no relative precision.
bool close_db(double expected, double actual) { return std::fabs(expected - actual) <= 1e-6; }

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*g", kCsvSignificantDigits, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string sweep_header(SweepParameter p, bool finite_bandwidth, bool series) {
  std::string h = series ? "series," : "";
  h += parameter_column(p);
  h += ",p_rx_dbm";
  if (finite_bandwidth) h += ",snr_db";
  h += ",c_inf_bps";
  if (finite_bandwidth) h += ",c_w_bps,regime";
  return h;
}

void write_sweep_rows(std::ostream& out, std::span<const SweepRow> rows, bool finite_bandwidth,
                      std::optional<std::string_view> series) {
  for (const auto& r : rows) {
    if (series) out << *series << ',';
    out << format_number(r.x) << ',' << format_number(r.p_rx_dbm);
    if (finite_bandwidth) out << ',' << format_number(r.snr_db.value_or(NAN));
    out << ',' << format_number(r.c_inf_bps);
    if (finite_bandwidth) {
      out << ',' << format_number(r.c_w_bps.value_or(NAN)) << ','
          << (r.regime ? to_string(*r.regime) : std::string_view{"?"});
    }
    out << '\n';
  }
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    table.push_back(std::move(fields));
  }
  return table;
}

std::vector<std::size_t> audit_sweep_csv(const SweepSpec& spec, std::string_view csv_text, double rel_tol) {
  const CsvTable table = parse_csv(csv_text);
  const bool finite = has_finite_bandwidth(spec);
  if (table.empty()) throw ParseError("empty CSV");

  const auto header = parse_csv(sweep_header(spec.parameter, finite)).front();
  if (table.front() != header) throw ParseError("CSV header does not match the sweep");

  std::vector<std::size_t> mismatches;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& f = table[i];
    if (f.size() != header.size()) throw ParseError("CSV row " + std::to_string(i) + " has the wrong field count");
    const SweepRow r = evaluate_point(spec, to_double(f[0]));
    bool ok = close_db(r.p_rx_dbm, to_double(f[1]));
    if (finite) {
      ok = ok && close_db(*r.snr_db, to_double(f[2])) && close(r.c_inf_bps, to_double(f[3]), rel_tol) &&
           close(*r.c_w_bps, to_double(f[4]), rel_tol) && f[5] == to_string(*r.regime);
    } else {
      ok = ok && close(r.c_inf_bps, to_double(f[2]), rel_tol);
    }
    if (!ok) mismatches.push_back(i);
  }
  return mismatches;
}

}  // namespace bscap
