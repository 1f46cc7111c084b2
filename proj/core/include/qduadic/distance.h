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
#ifndef QDUADIC_DISTANCE_H
#define QDUADIC_DISTANCE_H

#include <cstdint>
#include <string>
#include <vector>

#include "qduadic/cyclic.h"
#include "qduadic/enumerate.h"
#include "qduadic/support_search.h"

namespace qduadic {

enum class DistanceKind { kExact, kLowerBound, kUpperBound, kInterval };
enum class DistanceMethod { kFullEnumeration, kSupportSearch, kDefiningSetTheory };

std::string to_string(DistanceKind kind);
std::string to_string(DistanceMethod method);
DistanceKind distance_kind_from_string(const std::string& s);
DistanceMethod distance_method_from_string(const std::string& s);

/// Exact value or certified range for a minimum-weight problem.
///
/// lo is always a proven lower bound and hi a proven upper bound.
struct DistanceResult {
    DistanceKind kind = DistanceKind::kInterval;
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    DistanceMethod method = DistanceMethod::kFullEnumeration;
    std::uint64_t work = 0;
    std::vector<Elem> witness;  // a codeword of weight hi, when one was found

    static DistanceResult make_exact(std::uint64_t value, DistanceMethod method, std::uint64_t work,
                                     std::vector<Elem> witness = {});
    /// Exact when lo == hi. Otherwise kLowerBound without a witness,
    /// kUpperBound when lo is the trivial 1, kInterval when both ends carry
    /// information.
    static DistanceResult make_range(std::uint64_t lo, std::uint64_t hi, DistanceMethod method, std::uint64_t work,
                                     std::vector<Elem> witness = {});

    bool is_exact() const { return kind == DistanceKind::kExact; }
    /// Throws std::logic_error when the result is not exact.
    std::uint64_t value() const;

    bool operator==(const DistanceResult&) const = default;
};

/// Range of min(x, y) given ranges for x and y.
DistanceResult min_of(const DistanceResult& a, const DistanceResult& b);

struct DistanceOptions {
    /// Maximum nonzero codewords visited by full enumeration.
    std::uint64_t budget = std::uint64_t{1} << 26;
    /// Maximum candidates tried by support search.
    std::uint64_t support_budget = std::uint64_t{1} << 26;
    unsigned workers = 1;
};

/// Parses "67108864", "2^26" or "1<<26".
std::uint64_t parse_budget(const std::string& text);

/// Minimum nonzero weight. Exact by enumeration when q^k - 1 fits in the
/// budget, otherwise by support search (exact if a hit follows exhausted
/// lower weights, an interval if not). Throws std::invalid_argument for the
/// zero code or a zero budget.
DistanceResult min_weight(const CyclicCode& code, const DistanceOptions& options = {});

/// Minimum weight over codewords whose coordinate sum is nonzero. Throws
/// std::domain_error when a complete enumeration finds no odd-like word.
DistanceResult min_odd_like_weight(const CyclicCode& code, const DistanceOptions& options = {});

/// Minimum weight over d \ c. Membership in c is decided by the syndrome
/// against c's check matrix. Throws std::invalid_argument unless c is a
/// proper subcode of d.
DistanceResult min_weight_diffset(const CyclicCode& d, const CyclicCode& c, const DistanceOptions& options = {});

/// Same set difference, but when c is the even-like subcode of d the
/// membership test is just the coordinate sum. Throws std::invalid_argument
/// when c is not d's even-like subcode.
DistanceResult min_weight_diffset_even_like(const CyclicCode& d, const CyclicCode& c,
                                            const DistanceOptions& options = {});

using WeightDistribution = std::vector<std::uint64_t>;

/// Histogram indexed by weight (size n + 1). Throws BudgetExceededError when
/// q^k - 1 exceeds the budget.
WeightDistribution weight_distribution(const CyclicCode& code, const DistanceOptions& options = {});

/// Support search alone, for cross-checks against enumeration.
DistanceResult min_weight_by_support_search(const CyclicCode& code, const DistanceOptions& options = {});
DistanceResult min_odd_like_weight_by_support_search(const CyclicCode& code, const DistanceOptions& options = {});

/// BCH bound from the defining set alone: one more than the longest run
/// {c, c+b, ..., c+(r-1)b} inside T over all steps b coprime to n. Capped at
/// n + 1 when T is everything (the zero code).
std::uint64_t bch_bound(const DefiningSet& t);

}  // namespace qduadic

#endif  // QDUADIC_DISTANCE_H
