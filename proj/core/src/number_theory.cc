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

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qduadic {

namespace {

__extension__ using uint128 = unsigned __int128;
__extension__ using int128 = __int128;

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("inverse_mod: modulus must be positive");
    }
    int128 old_r = static_cast<int128>(a % m), r = m;
    int128 old_s = 1, s = 0;
    while (r != 0) {
        int128 quot = old_r / r;
        std::tie(old_r, r) = std::pair<int128, int128>{r, old_r - quot * r};
        std::tie(old_s, s) = std::pair<int128, int128>{s, old_s - quot * s};
    }
    if (old_r != 1) {
        if (m == 1) {
            return 0;
        }
        throw std::invalid_argument(
            "inverse_mod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    int128 inv = old_s % static_cast<int128>(m);
    if (inv < 0) {
        inv += m;
    }
    return static_cast<std::uint64_t>(inv);
}

std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("multiplicative_order_mod: modulus must be positive");
    }
    if (std::gcd(a % n, n) != 1 && n != 1) {
        throw std::invalid_argument(
            "multiplicative_order_mod: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    if (n == 1) {
        return 1;
    }
    std::uint64_t t = 1;
    std::uint64_t x = a % n;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++t;
    }
    return t;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) {
        return 2;
    }
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) {
            return d;
        }
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

std::vector<PrimeFactor> collect(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    std::vector<PrimeFactor> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

}  // namespace

std::vector<PrimeFactor> factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("factorize: zero has no factorization");
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    return collect(std::move(primes));
}

std::vector<PrimeFactor> factorize_trial(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) {
        throw std::invalid_argument("factorize_trial: zero has no factorization");
    }
    if (n > cap) {
        throw std::invalid_argument(
            "factorize_trial: " + std::to_string(n) + " exceeds the trial-division cap " + std::to_string(cap));
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        primes.push_back(n);
    }
    return collect(std::move(primes));
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) {
        throw std::invalid_argument("prime_power_decomposition: " + std::to_string(q) + " is not a prime power");
    }
    auto factors = factorize(q);
    if (factors.size() != 1) {
        throw std::invalid_argument("prime_power_decomposition: " + std::to_string(q) + " is not a prime power");
    }
    return {factors[0].prime, factors[0].exponent};
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw std::overflow_error(
                "checked_pow: " + std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
        }
        result *= base;
    }
    return result;
}

unsigned valuation_of_power_minus_one(std::uint64_t a, std::uint64_t t, std::uint64_t p) {
    if (p < 2) {
        throw std::invalid_argument("valuation_of_power_minus_one: p must be at least 2");
    }
    unsigned z = 0;
    std::uint64_t modulus = p;
    while (true) {
        if (pow_mod(a, t, modulus) != 1 % modulus) {
            return z;
        }
        ++z;
        if (modulus > std::numeric_limits<std::uint64_t>::max() / p) {
            throw std::overflow_error("valuation_of_power_minus_one: valuation exceeds 64-bit range");
        }
        modulus *= p;
    }
}

}  // namespace qduadic
