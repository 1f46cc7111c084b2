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

#include "qduadic/distance.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "qduadic/errors.h"

namespace qduadic {

std::string to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::kExact: return "exact";
        case DistanceKind::kLowerBound: return "lower_bound";
        case DistanceKind::kUpperBound: return "upper_bound";
        case DistanceKind::kInterval: return "interval";
    }
    return "interval";
}

std::string to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::kFullEnumeration: return "full_enumeration";
        case DistanceMethod::kSupportSearch: return "support_search";
        case DistanceMethod::kDefiningSetTheory: return "defining_set_theory";
    }
    return "full_enumeration";
}

DistanceKind distance_kind_from_string(const std::string& s) {
    for (auto kind : {DistanceKind::kExact, DistanceKind::kLowerBound, DistanceKind::kUpperBound,
                      DistanceKind::kInterval}) {
        if (to_string(kind) == s) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown distance kind '" + s + "'");
}

DistanceMethod distance_method_from_string(const std::string& s) {
    for (auto method : {DistanceMethod::kFullEnumeration, DistanceMethod::kSupportSearch,
                        DistanceMethod::kDefiningSetTheory}) {
        if (to_string(method) == s) {
            return method;
        }
    }
    throw std::invalid_argument("unknown distance method '" + s + "'");
}

DistanceResult DistanceResult::make_exact(std::uint64_t value, DistanceMethod method, std::uint64_t work,
                                          std::vector<Elem> witness) {
    return {DistanceKind::kExact, value, value, method, work, std::move(witness)};
}

DistanceResult DistanceResult::make_range(std::uint64_t lo, std::uint64_t hi, DistanceMethod method,
                                          std::uint64_t work, std::vector<Elem> witness) {
    if (lo > hi) {
        throw ConsistencyError("DistanceResult: lower bound " + std::to_string(lo) + " exceeds upper bound " +
                               std::to_string(hi));
    }
    DistanceKind kind = DistanceKind::kInterval;
    if (lo == hi) {
        kind = DistanceKind::kExact;
    } else if (witness.empty()) {
        kind = DistanceKind::kLowerBound;
    } else if (lo <= 1) {
        kind = DistanceKind::kUpperBound;
    }
    return {kind, lo, hi, method, work, std::move(witness)};
}

std::uint64_t DistanceResult::value() const {
    if (!is_exact()) {
        throw std::logic_error("DistanceResult::value: result is " + to_string(kind) + " [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "]");
    }
    return lo;
}

DistanceResult min_of(const DistanceResult& a, const DistanceResult& b) {
    const DistanceResult& smaller_hi = (b.hi < a.hi) ? b : a;
    return DistanceResult::make_range(std::min(a.lo, b.lo), smaller_hi.hi, smaller_hi.method, a.work + b.work,
                                      smaller_hi.witness);
}

std::uint64_t parse_budget(const std::string& text) {
    auto parse_uint = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("invalid budget '" + text + "'");
        }
        try {
            return std::stoull(s);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("budget '" + text + "' overflows 64 bits");
        }
    };
    std::uint64_t value = 0;
    std::size_t pos = text.find('^');
    std::size_t shift_pos = text.find("<<");
    if (pos != std::string::npos || shift_pos != std::string::npos) {
        const bool caret = pos != std::string::npos;
        const std::uint64_t base = parse_uint(text.substr(0, caret ? pos : shift_pos));
        const std::uint64_t exp = parse_uint(text.substr(caret ? pos + 1 : shift_pos + 2));
        if (!caret) {
            if (exp >= 64 || (base >> (63 - exp)) > 1) {
                throw std::invalid_argument("budget '" + text + "' overflows 64 bits");
            }
            value = base << exp;
        } else {
            value = 1;
            for (std::uint64_t i = 0; i < exp; ++i) {
                if (base != 0 && value > UINT64_MAX / base) {
                    throw std::invalid_argument("budget '" + text + "' overflows 64 bits");
                }
                value *= base;
            }
        }
    } else {
        value = parse_uint(text);
    }
    if (value == 0) {
        throw std::invalid_argument("budget must be positive");
    }
    return value;
}

namespace {

void require_budget(const DistanceOptions& options) {
    if (options.budget == 0 || options.support_budget == 0) {
        throw std::invalid_argument("distance budget must be positive");
    }
}

bool fits_enumeration(const CyclicCode& code, const DistanceOptions& options) {
    auto total = message_space_size(*code.field(), code.k());
    return total && *total - 1 <= options.budget;
}

std::uint32_t weight_of(std::span<const Elem> word) {
    return static_cast<std::uint32_t>(std::count_if(word.begin(), word.end(), [](Elem x) { return x != 0; }));
}

Matrix all_ones_row(const CyclicCode& code) {
    Matrix ones(code.field(), 1, code.n());
    for (std::size_t i = 0; i < code.n(); ++i) {
        ones.set(0, i, 1);
    }
    return ones;
}

DistanceResult from_enumeration(const EnumerateOutcome& outcome) {
    return DistanceResult::make_exact(*outcome.best_weight, DistanceMethod::kFullEnumeration, outcome.visited,
                                      outcome.witness);
}

// fallback_witness is a known member of the target set; it caps hi when
// support search runs out of budget before a hit.
DistanceResult from_support_search(const SupportSearchOutcome& outcome, std::vector<Elem> fallback_witness) {
    const std::uint64_t lo = std::uint64_t{outcome.exhausted_through} + 1;
    if (outcome.hit_weight) {
        return DistanceResult::make_range(lo, *outcome.hit_weight, DistanceMethod::kSupportSearch, outcome.candidates,
                                          outcome.witness);
    }
    const std::uint64_t hi = weight_of(fallback_witness);
    return DistanceResult::make_range(std::min(lo, hi), hi, DistanceMethod::kSupportSearch, outcome.candidates,
                                      std::move(fallback_witness));
}

std::vector<Elem> generator_row(const CyclicCode& code, std::size_t r) {
    auto row = code.generator_matrix().row(r);
    return {row.begin(), row.end()};
}

void require_odd_like_members(const CyclicCode& code) {
    if (code.defining_set().contains(0)) {
        throw std::domain_error("min_odd_like_weight: 0 is in the defining set, so every codeword is even-like");
    }
}

}  // namespace

DistanceResult min_weight(const CyclicCode& code, const DistanceOptions& options) {
    require_budget(options);
    if (code.k() == 0) {
        throw std::invalid_argument("min_weight: the zero code has no nonzero codewords");
    }
    if (fits_enumeration(code, options)) {
        EnumerateOptions eo;
        eo.workers = options.workers;
        return from_enumeration(enumerate_codewords(code.generator_matrix(), nullptr, eo));
    }
    return min_weight_by_support_search(code, options);
}

DistanceResult min_weight_by_support_search(const CyclicCode& code, const DistanceOptions& options) {
    require_budget(options);
    if (code.k() == 0) {
        throw std::invalid_argument("min_weight: the zero code has no nonzero codewords");
    }
    auto outcome = support_search(code.check_matrix(), nullptr, options.support_budget, code.n());
    return from_support_search(outcome, generator_row(code, 0));
}

DistanceResult min_odd_like_weight(const CyclicCode& code, const DistanceOptions& options) {
    require_budget(options);
    require_odd_like_members(code);
    if (fits_enumeration(code, options)) {
        EnumerateOptions eo;
        eo.workers = options.workers;
        Matrix ones = all_ones_row(code);
        auto outcome = enumerate_codewords(code.generator_matrix(), &ones, eo);
        if (!outcome.best_weight) {
            throw std::domain_error("min_odd_like_weight: no odd-like codeword found");
        }
        return from_enumeration(outcome);
    }
    return min_odd_like_weight_by_support_search(code, options);
}

DistanceResult min_odd_like_weight_by_support_search(const CyclicCode& code, const DistanceOptions& options) {
    require_budget(options);
    require_odd_like_members(code);
    Matrix ones = all_ones_row(code);
    auto outcome = support_search(code.check_matrix(), &ones, options.support_budget, code.n());
    // With 0 outside the defining set, g(1) != 0: the generator itself is odd-like.
    return from_support_search(outcome, generator_row(code, 0));
}

DistanceResult min_weight_diffset(const CyclicCode& d, const CyclicCode& c, const DistanceOptions& options) {
    require_budget(options);
    if (!is_subcode(c, d)) {
        throw std::invalid_argument("min_weight_diffset: C is not contained in D");
    }
    if (c.k() == d.k()) {
        throw std::invalid_argument("min_weight_diffset: C = D, the difference set is empty");
    }
    if (fits_enumeration(d, options)) {
        EnumerateOptions eo;
        eo.workers = options.workers;
        auto outcome = enumerate_codewords(d.generator_matrix(), &c.check_matrix(), eo);
        if (!outcome.best_weight) {
            throw ConsistencyError("min_weight_diffset: no codeword of D outside C");
        }
        return from_enumeration(outcome);
    }
    std::vector<Elem> fallback;
    for (std::size_t r = 0; r < d.k(); ++r) {
        auto row = generator_row(d, r);
        if (!c.contains(row)) {
            fallback = std::move(row);
            break;
        }
    }
    auto outcome = support_search(d.check_matrix(), &c.check_matrix(), options.support_budget, d.n());
    return from_support_search(outcome, std::move(fallback));
}

DistanceResult min_weight_diffset_even_like(const CyclicCode& d, const CyclicCode& c,
                                            const DistanceOptions& options) {
    ResidueSet expected = d.defining_set().members();
    expected.push_back(0);
    std::sort(expected.begin(), expected.end());
    if (d.defining_set().contains(0) || c.defining_set().members() != expected) {
        throw std::invalid_argument("min_weight_diffset_even_like: C is not the even-like subcode of D");
    }
    return min_odd_like_weight(d, options);
}

WeightDistribution weight_distribution(const CyclicCode& code, const DistanceOptions& options) {
    require_budget(options);
    WeightDistribution hist(code.n() + 1, 0);
    hist[0] = 1;
    if (code.k() == 0) {
        return hist;
    }
    if (!fits_enumeration(code, options)) {
        throw BudgetExceededError("weight_distribution: " + std::to_string(code.field()->order()) + "^" +
                                  std::to_string(code.k()) + " codewords exceed the budget");
    }
    EnumerateOptions eo;
    eo.workers = options.workers;
    eo.histogram = true;
    auto outcome = enumerate_codewords(code.generator_matrix(), nullptr, eo);
    for (std::size_t w = 0; w < outcome.histogram.size(); ++w) {
        hist[w] += outcome.histogram[w];
    }
    return hist;
}

std::uint64_t bch_bound(const DefiningSet& t) {
    const std::uint32_t n = t.n();
    if (t.size() >= n) {
        return std::uint64_t{n} + 1;
    }
    std::vector<bool> member(n, false);
    for (std::uint32_t j : t.members()) {
        member[j] = true;
    }
    std::uint64_t best = 0;
    for (std::uint32_t b = 1; b < n; ++b) {
        if (std::gcd(b, n) != 1) {
            continue;
        }
        // Walk the cycle j -> j + b twice to catch runs that wrap around.
        std::uint64_t run = 0;
        std::uint32_t j = 0;
        for (std::uint64_t i = 0; i < 2ULL * n; ++i, j = (j + b) % n) {
            run = member[j] ? run + 1 : 0;
            best = std::max(best, std::min<std::uint64_t>(run, n - 1));
        }
    }
    return best + 1;
}

}  // namespace qduadic
