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

// CSV output: ',' separator, '.' decimal point, '\n' line ends, header row
// always present, numbers printed with 9 significant digits.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bscap/sweep.hpp"

namespace bscap {

inline constexpr int kCsvSignificantDigits = 9;

/// Locale-independent "%.9g".
std::string format_number(double v);

/// Header for sweep rows; the SNR, C_W and regime columns appear only for
/// finite bandwidth. With `series`, a leading "series" column is added.
std::string sweep_header(SweepParameter p, bool finite_bandwidth, bool series = false);

void write_sweep_rows(std::ostream& out, std::span<const SweepRow> rows, bool finite_bandwidth,
                      std::optional<std::string_view> series = std::nullopt);

using CsvTable = std::vector<std::vector<std::string>>;

/// Splits CSV text (no quoting) into rows of fields, header included.
CsvTable parse_csv(std::string_view text);

/// Recomputes every row of a sweep CSV written for `spec` from its swept
/// value and returns the 1-based data-row numbers that do not match within
/// the given relative tolerance. Throws ParseError on a malformed table.
std::vector<std::size_t> audit_sweep_csv(const SweepSpec& spec, std::string_view csv_text, double rel_tol = 1e-7);

}  // namespace bscap
