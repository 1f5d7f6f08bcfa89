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

#include <exception>

#include "bscap/sweep.hpp"

namespace bscap {

std::vector<SweepRow> sweep_parallel(const SweepSpec& spec) {
  check_applicable(spec.base, spec.parameter);

  const auto n = static_cast<std::ptrdiff_t>(spec.values.size());
  std::vector<SweepRow> rows(spec.values.size());
  // Exceptions may not leave an OpenMP region; keep one per point and
  // rethrow the lowest-index failure so errors match the serial kernel.
  std::vector<std::exception_ptr> errors(spec.values.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = evaluate_point(spec, spec.values[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace bscap
