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

#include "qduadic/duadic.h"

#include <numeric>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles/oracles.h"
#include "qduadic/errors.h"

namespace qduadic {
namespace {

std::uint64_t fnv1a(std::uint64_t n, std::uint64_t q, const ResidueSet& s0) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h = (h ^ ((v >> (8 * i)) & 0xffU)) * 1099511628211ULL;
        }
    };
    feed(n);
    feed(q);
    for (auto r : s0) {
        feed(r);
    }
    return h;
}

bool swaps(const Splitting& s, std::int64_t a) {
    return mu_apply(s.s0, a, s.n) == s.s1 && mu_apply(s.s1, a, s.n) == s.s0;
}

TEST(Splitting, SpecExamples) {
    auto s = splitting_by(7, 2, -1);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->s0, (ResidueSet{1, 2, 4}));
    EXPECT_EQ(s->s1, (ResidueSet{3, 5, 6}));
    EXPECT_EQ(s->a, 6U);
    EXPECT_FALSE(splitting_by(17, 2, -1));
    auto h = splitting_by(7, 4, -2);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->a, 5U);
    EXPECT_TRUE(swaps(*h, 5));
    EXPECT_TRUE(find_splittings(5, 2).empty());
    EXPECT_FALSE(find_splittings(49, 2, 1).empty());
}

TEST(Splitting, LengthSevenEnumeration) {
    auto all = find_splittings(7, 2);
    std::set<std::uint32_t> multipliers;
    for (const auto& s : all) {
        EXPECT_TRUE(s.s0 == (ResidueSet{1, 2, 4}) || s.s0 == (ResidueSet{3, 5, 6}));
        multipliers.insert(s.a);
    }
    EXPECT_EQ(multipliers, (std::set<std::uint32_t>{3, 5, 6}));
    EXPECT_EQ(all.size(), 6U);
    EXPECT_EQ(find_splittings(7, 2, 1).front().a, 3U);
    EXPECT_EQ(find_splittings(7, 2, 1).front().s0, (ResidueSet{1, 2, 4}));
}

TEST(Splitting, MatchesBruteForceOracle) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (std::uint32_t n = 3; n <= 45; n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            std::set<ResidueSet> found;
            for (const auto& s : find_splittings(n, q)) {
                EXPECT_NO_THROW(validate(s));
                EXPECT_TRUE(swaps(s, s.a));
                found.insert(s.s0);
            }
            EXPECT_EQ(found, oracle::brute_splittings(n, q)) << n << " " << q;
            EXPECT_EQ(!found.empty(), duadic_exists(n, q));
            EXPECT_EQ(duadic_exists(n, q), oracle::naive_is_square(q % n, n));
        }
    }
}

TEST(Splitting, SquaredMultiplierFixesEachSide) {
    for (std::uint32_t n = 3; n <= 61; n += 2) {
        for (const auto& s : find_splittings(n, 2, 200)) {
            const std::int64_t a2 = static_cast<std::int64_t>(s.a) * s.a;
            EXPECT_EQ(mu_apply(s.s0, a2, n), s.s0);
            EXPECT_EQ(mu_apply(s.s1, a2, n), s.s1);
        }
    }
}

TEST(Splitting, QuadraticFieldAlwaysSplits) {
    for (std::uint32_t n = 3; n <= 61; n += 2) {
        EXPECT_TRUE(duadic_exists(n, 4));
        EXPECT_FALSE(find_splittings(n, 4, 1).empty());
        if (n % 3 != 0) {
            EXPECT_TRUE(duadic_exists(n, 9));
        }
    }
}

TEST(Splitting, MinusOneAndMinusQAgreeWhenOrderOdd) {
    int checked = 0;
    for (std::uint32_t n = 3; n <= 61; n += 2) {
        if (oracle::naive_order(2, n) % 2 == 0) {
            continue;
        }
        auto m1 = splitting_by(n, 4, -1);
        auto mq = splitting_by(n, 4, -2);
        ASSERT_TRUE(m1 && mq) << n;
        EXPECT_TRUE(same_partition(*m1, *mq));
        ++checked;
    }
    EXPECT_GE(checked, 5);  // 7, 23, 31, 47, 49
}

TEST(Splitting, IdentifierIsFnvOfLengthFieldAndS0) {
    for (std::uint32_t n : {7U, 17U, 23U, 31U, 49U}) {
        for (const auto& s : find_splittings(n, 2, 8)) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(n, 2, s.s0)));
            EXPECT_EQ(s.id(), buf);
        }
    }
    auto a = *splitting_by(7, 2, 3);
    auto b = *splitting_by(7, 2, 6);
    EXPECT_EQ(a.id(), b.id());
    EXPECT_NE(a.id(), swapped(a).id());
}

TEST(Splitting, ValidateRejectsBrokenSplittings) {
    auto s = *splitting_by(7, 2, -1);
    auto bad = s;
    bad.a = 2;
    EXPECT_THROW(validate(bad), ConsistencyError);
    bad = s;
    bad.s1 = {3, 5};
    EXPECT_THROW(validate(bad), ConsistencyError);
    EXPECT_THROW(splitting_by(8, 3, -1), std::invalid_argument);
    EXPECT_THROW(find_splittings(9, 3), std::invalid_argument);
    EXPECT_TRUE(same_partition(s, swapped(s)));
    EXPECT_EQ(swapped(swapped(s)), s);
}

TEST(Quartet, DimensionsAndNesting) {
    auto f2 = make_field(2, 1);
    for (std::uint32_t n : {7U, 17U, 23U, 31U, 41U}) {
        auto s = find_splittings(n, 2, 1).front();
        auto quartet = build_quartet(s, f2);
        EXPECT_EQ(quartet.d0.k(), (n + 1) / 2);
        EXPECT_EQ(quartet.d1.k(), (n + 1) / 2);
        EXPECT_EQ(quartet.c0.k(), (n - 1) / 2);
        EXPECT_EQ(quartet.c1.k(), (n - 1) / 2);
        EXPECT_TRUE(is_subcode(quartet.c0, quartet.d0));
        EXPECT_TRUE(is_subcode(quartet.c1, quartet.d1));
        for (std::size_t r = 0; r < quartet.c0.k(); ++r) {
            EXPECT_TRUE(is_even_like(quartet.c0.generator_matrix().row(r), *f2));
        }
        EXPECT_FALSE(is_even_like(quartet.d0.generator_matrix().row(0), *f2));
        auto sw = swapped(quartet);
        EXPECT_EQ(sw.d0.defining_set(), quartet.d1.defining_set());
        EXPECT_EQ(sw.c1.defining_set(), quartet.c0.defining_set());
    }
    auto q17 = build_quartet(find_splittings(17, 2, 1).front(), f2);
    EXPECT_EQ(q17.d0.k(), 9U);
    EXPECT_EQ(q17.c0.k(), 8U);
    EXPECT_THROW(build_quartet(*splitting_by(7, 2, -1), make_field(2, 2)), std::invalid_argument);
}

TEST(SquareRoot, Examples) {
    auto exact = [](std::uint64_t d) { return DistanceResult::make_exact(d, DistanceMethod::kFullEnumeration, 0); };
    auto s7 = *splitting_by(7, 2, -1);
    EXPECT_TRUE(mu_minus_one_gives(s7));
    auto r7 = check_square_root_bound(s7, exact(3), exact(3));
    EXPECT_EQ(r7.equal_odd_like, CheckOutcome::kPass);
    EXPECT_EQ(r7.square_bound, CheckOutcome::kPass);
    EXPECT_EQ(r7.mu_minus_one_bound, CheckOutcome::kPass);
    EXPECT_TRUE(r7.ok());

    auto s17 = find_splittings(17, 2, 1).front();
    EXPECT_FALSE(mu_minus_one_gives(s17));
    auto r17 = check_square_root_bound(s17, exact(5), exact(5));
    EXPECT_EQ(r17.square_bound, CheckOutcome::kPass);
    EXPECT_EQ(r17.mu_minus_one_bound, CheckOutcome::kNotApplicable);

    auto s23 = *splitting_by(23, 2, -1);
    EXPECT_EQ(check_square_root_bound(s23, exact(7), exact(7)).mu_minus_one_bound, CheckOutcome::kPass);
    // 5^2 - 5 + 1 = 21 < 23: a hypothetical d = 5 must fail the mu_{-1} clause but pass d^2 >= n.
    auto bad = check_square_root_bound(s23, exact(5), exact(5));
    EXPECT_EQ(bad.square_bound, CheckOutcome::kPass);
    EXPECT_EQ(bad.mu_minus_one_bound, CheckOutcome::kFail);
    EXPECT_FALSE(bad.ok());
    EXPECT_EQ(check_square_root_bound(s23, exact(7), exact(8)).equal_odd_like, CheckOutcome::kFail);

    // An interval straddling the threshold decides nothing.
    auto range = DistanceResult::make_range(4, 9, DistanceMethod::kSupportSearch, 0, {1});
    auto partial = check_square_root_bound(s23, range, range);
    EXPECT_EQ(partial.square_bound, CheckOutcome::kVacuous);
    EXPECT_EQ(partial.mu_minus_one_bound, CheckOutcome::kVacuous);
    EXPECT_TRUE(partial.ok());
}

TEST(Certificate, SpecExamples) {
    auto c49 = degeneracy_certificate(49, 2, Construction::kCss);
    ASSERT_EQ(c49.primes.size(), 1U);
    EXPECT_EQ(c49.primes[0].p, 7U);
    EXPECT_EQ(c49.primes[0].m, 2U);
    EXPECT_EQ(c49.primes[0].t, 3U);
    EXPECT_EQ(c49.primes[0].z, 1U);
    EXPECT_EQ(c49.purity_bound, 7U);
    EXPECT_FALSE(c49.m_exceeds_2z_everywhere);
    EXPECT_FALSE(c49.hypotheses_met);
    EXPECT_TRUE(c49.example_clause);

    auto c343 = degeneracy_certificate(343, 2, Construction::kCss);
    EXPECT_EQ(c343.primes[0].m, 3U);
    EXPECT_TRUE(c343.m_exceeds_2z_everywhere);
    EXPECT_TRUE(c343.hypotheses_met);
    EXPECT_EQ(c343.purity_bound, 7U);
    EXPECT_TRUE(c343.purity_bound_below_sqrt_n);

    auto c7 = degeneracy_certificate(7, 2, Construction::kCss);
    EXPECT_FALSE(c7.hypotheses_met);
    EXPECT_FALSE(c7.example_clause);

    auto h343 = degeneracy_certificate(343, 2, Construction::kHermitian);
    EXPECT_EQ(h343.order_n_q, 147U);
    EXPECT_TRUE(h343.order_n_q_odd);
    EXPECT_TRUE(h343.every_prime_minus_one_mod_4);
    EXPECT_EQ(h343.primes[0].t, 3U);  // ord_7(4)
    EXPECT_EQ(h343.primes[0].z, 1U);  // 7 || 4^3 - 1 = 63
    EXPECT_TRUE(h343.hypotheses_met);
    EXPECT_FALSE(h343.example_clause);

    EXPECT_THROW(degeneracy_certificate(21, 3, Construction::kCss), std::invalid_argument);
}

TEST(Certificate, ValuationsAgainstExactArithmetic) {
    for (std::uint64_t n = 3; n <= 2001; n += 2) {
        for (std::uint64_t q : {2, 3, 4}) {
            if (std::gcd(n, q) != 1) {
                continue;
            }
            for (auto construction : {Construction::kCss, Construction::kHermitian}) {
                auto cert = degeneracy_certificate(n, q, construction);
                const std::uint64_t base = construction == Construction::kHermitian ? q * q : q;
                auto factors = oracle::naive_factor(n);
                ASSERT_EQ(cert.primes.size(), factors.size());
                std::uint64_t bound = UINT64_MAX;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    const auto& pc = cert.primes[i];
                    EXPECT_EQ(pc.p, factors[i].first);
                    EXPECT_EQ(pc.m, factors[i].second);
                    EXPECT_EQ(pc.t, oracle::naive_order(base % pc.p, pc.p));
                    EXPECT_EQ(pc.z, oracle::exact_valuation(base, pc.t, pc.p));
                    EXPECT_EQ(pc.q_square_mod_p, oracle::naive_is_square(q % pc.p, pc.p));
                    EXPECT_EQ(pc.m_exceeds_2z, pc.m > 2 * pc.z);
                    std::uint64_t pz = 1;
                    for (unsigned k = 0; k < pc.z; ++k) {
                        pz *= pc.p;
                    }
                    EXPECT_EQ(pc.p_pow_z, pz);
                    bound = std::min(bound, pz);
                }
                EXPECT_EQ(cert.purity_bound, bound);
                EXPECT_EQ(cert.order_n_q, oracle::naive_order(q % n, n));
                if (cert.m_exceeds_2z_everywhere) {
                    EXPECT_TRUE(cert.purity_bound_below_sqrt_n) << n;
                }
            }
        }
    }
}

}  // namespace
}  // namespace qduadic
