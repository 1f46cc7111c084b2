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

#ifndef QDUADIC_NUMBER_THEORY_H
#define QDUADIC_NUMBER_THEORY_H

#include <cstdint>
#include <utility>
#include <vector>

namespace qduadic {

struct PrimeFactor {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimeFactor&) const = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; throws std::invalid_argument when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Smallest t >= 1 with a^t = 1 mod n; throws std::invalid_argument when
/// gcd(a, n) != 1.
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Full factorization (Pollard rho above the trial-division range).
std::vector<PrimeFactor> factorize(std::uint64_t n);

/// Factorization by trial division only; throws std::invalid_argument when
/// n exceeds cap.
std::vector<PrimeFactor> factorize_trial(std::uint64_t n, std::uint64_t cap = 1'000'000);

/// Writes q = p^s. Throws std::invalid_argument if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q);

/// Exact base^exp, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Largest z with p^z | (a^t - 1). Computed with modular arithmetic, so a^t is
/// never formed. Throws std::overflow_error if p^(z+1) does not fit in 64 bits.
unsigned valuation_of_power_minus_one(std::uint64_t a, std::uint64_t t, std::uint64_t p);

}  // namespace qduadic

#endif  // QDUADIC_NUMBER_THEORY_H
