// Copyright 2026 The qduadic Authors
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

#ifndef QDUADIC_ERRORS_H
#define QDUADIC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qduadic {

/// A requested field (or splitting-field extension) is larger than the
/// arithmetic layer supports.
struct FieldTooLargeError : std::length_error {
    using std::length_error::length_error;
};

/// The requested object does not exist mathematically (no duadic codes for
/// this length, no splitting for this multiplier, Hermitian condition unmet).
struct NonexistenceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its work budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independently computed quantities that must agree did not.
/// Always indicates a bug, never bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qduadic

#endif  // QDUADIC_ERRORS_H
