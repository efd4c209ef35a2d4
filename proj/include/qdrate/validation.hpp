// Copyright 2026 The qdrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Self-check suite run by `qdrate validate`: generic-vs-written matrix
// comparisons, closed-form-vs-numeric currents and generator invariants.

#ifndef QDRATE_VALIDATION_HPP
#define QDRATE_VALIDATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdrate/liouvillian.hpp"

namespace qdrate {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Shifts one entry of the written blocked double-dot matrix before it is
/// compared; used to confirm that the comparison notices a wrong coefficient.
struct Perturbation {
  std::size_t row = 0;
  std::size_t col = 0;
  double delta = 0.0;
};

struct ValidationOptions {
  std::optional<Perturbation> blocked_literal_perturbation;
  unsigned draws = 20;
  unsigned seed = 20260101;
};

struct SelfCheckReport {
  std::vector<CheckResult> checks;
  /// Informational lines (not pass/fail).
  std::vector<std::string> notes;
  bool ok() const;
};

/// Exact comparison of `literal` against `generic` on the support of `literal`.
CheckResult compare_generic_literal(const std::string& name, const Liouvillian& generic,
                                    const Liouvillian& literal);

/// Coefficients where the generic and written partial-regime generators
/// disagree, one line per entry.
std::vector<std::string> partial_regime_differences();

SelfCheckReport run_validation(const ValidationOptions& options = {});

}  // namespace qdrate

#endif  // QDRATE_VALIDATION_HPP
