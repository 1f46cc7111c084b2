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

#include "qduadic/number_theory.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles/oracles.h"

namespace qduadic {
namespace {

bool trial_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

TEST(NumberTheory, OrderMatchesNaiveLoop) {
    for (std::uint64_t n = 1; n < 200; ++n) {
        for (std::uint64_t a = 1; a < n + 3; ++a) {
            if (std::gcd(a, n) != 1) {
                continue;
            }
            EXPECT_EQ(multiplicative_order_mod(a, n), oracle::naive_order(a, n)) << a << " mod " << n;
        }
    }
}

TEST(NumberTheory, OrderRejectsNonUnits) { EXPECT_THROW(multiplicative_order_mod(7, 49), std::invalid_argument); }

TEST(NumberTheory, PowModAndInverse) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t m = rng() % 100000 + 2;
        const std::uint64_t a = rng() % m;
        const std::uint64_t e = rng() % 50;
        std::uint64_t expect = 1 % m;
        for (std::uint64_t k = 0; k < e; ++k) {
            expect = expect * a % m;
        }
        EXPECT_EQ(pow_mod(a, e, m), expect);
        if (std::gcd(a, m) == 1) {
            EXPECT_EQ(mul_mod(a, inverse_mod(a, m), m), 1 % m);
        } else {
            EXPECT_THROW(inverse_mod(a, m), std::invalid_argument);
        }
    }
}

TEST(NumberTheory, MulModNearOverflow) {
    const std::uint64_t m = (std::uint64_t{1} << 62) + 135;
    const std::uint64_t a = m - 1;
    EXPECT_EQ(mul_mod(a, a, m), 1U);  // (-1)^2
}

TEST(NumberTheory, PrimalityMatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) {
        EXPECT_EQ(is_prime(n), trial_prime(n)) << n;
    }
    EXPECT_TRUE(is_prime(2305843009213693951ULL));   // 2^61 - 1
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(NumberTheory, FactorizeMatchesNaive) {
    for (std::uint64_t n = 1; n < 3000; ++n) {
        auto got = factorize(n);
        auto want = oracle::naive_factor(n);
        ASSERT_EQ(got.size(), want.size()) << n;
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].prime, want[i].first);
            EXPECT_EQ(got[i].exponent, want[i].second);
        }
        EXPECT_EQ(factorize_trial(n), got);
    }
}

TEST(NumberTheory, FactorizeLargeSemiprime) {
    const std::uint64_t p = 1000003, q = 1000033;
    ASSERT_TRUE(trial_prime(p) && trial_prime(q));
    auto f = factorize(p * q);
    ASSERT_EQ(f.size(), 2U);
    EXPECT_EQ(f[0].prime, p);
    EXPECT_EQ(f[1].prime, q);
    EXPECT_THROW(factorize_trial(p * q), std::invalid_argument);
}

TEST(NumberTheory, PrimePowerDecomposition) {
    EXPECT_EQ(prime_power_decomposition(2), (std::pair<std::uint64_t, unsigned>{2, 1}));
    EXPECT_EQ(prime_power_decomposition(81), (std::pair<std::uint64_t, unsigned>{3, 4}));
    EXPECT_EQ(prime_power_decomposition(1024), (std::pair<std::uint64_t, unsigned>{2, 10}));
    EXPECT_THROW(prime_power_decomposition(6), std::invalid_argument);
    EXPECT_THROW(prime_power_decomposition(1), std::invalid_argument);
}

TEST(NumberTheory, CheckedPowOverflows) {
    EXPECT_EQ(checked_pow(2, 62), std::uint64_t{1} << 62);
    EXPECT_THROW(checked_pow(2, 64), std::overflow_error);
    EXPECT_THROW(checked_pow(7, 23), std::overflow_error);
}

TEST(NumberTheory, ValuationMatchesBigIntegers) {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 31, 127}) {
        for (std::uint64_t a : {2, 3, 4, 5, 8, 9, 16}) {
            if (a % p == 0) {
                continue;
            }
            for (std::uint64_t t = 1; t <= 60; ++t) {
                EXPECT_EQ(valuation_of_power_minus_one(a, t, p), oracle::exact_valuation(a, t, p))
                    << a << "^" << t << " - 1 at " << p;
            }
        }
    }
}

TEST(NumberTheory, ValuationExamples) {
    EXPECT_EQ(valuation_of_power_minus_one(2, 3, 7), 1U);    // 7 = 2^3 - 1
    EXPECT_EQ(valuation_of_power_minus_one(4, 3, 7), 1U);    // 63 = 9 * 7
    EXPECT_EQ(valuation_of_power_minus_one(2, 21, 7), 2U);   // 7^2 || 2^21 - 1
    EXPECT_EQ(valuation_of_power_minus_one(2, 147, 7), oracle::exact_valuation(2, 147, 7));
}

}  // namespace
}  // namespace qduadic
