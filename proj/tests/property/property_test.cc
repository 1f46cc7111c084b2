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

// Randomized and exhaustive invariants across modules.

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.h"
#include "qduadic/stabilizer.h"

namespace qduadic {
namespace {

TEST(FieldProperties, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(21);
    for (auto [p, m] : {std::pair{2U, 8U}, std::pair{3U, 5U}, std::pair{5U, 3U}, std::pair{2U, 24U},
                        std::pair{7U, 9U}}) {
        auto f = make_field(p, m);
        for (int i = 0; i < 2000; ++i) {
            const Elem a = rng() % f->order(), b = rng() % f->order(), c = rng() % f->order();
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            EXPECT_EQ(f->add(a, f->neg(a)), 0U);
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1U);
                EXPECT_EQ(f->pow(a, f->order() - 1), 1U);
            }
            // x -> x^p is additive.
            EXPECT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
        }
    }
}

TEST(CyclicProperties, MultipliersPreserveClosureAndDimension) {
    std::mt19937_64 rng(22);
    for (std::uint64_t q : {2, 3, 4}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n = 3; n <= 35; n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto cs = cyclotomic_cosets(n, q);
            for (int trial = 0; trial < 4; ++trial) {
                ResidueSet t;
                for (const auto& coset : cs.cosets()) {
                    if (rng() % 2) {
                        t.insert(t.end(), coset.begin(), coset.end());
                    }
                }
                std::sort(t.begin(), t.end());
                auto code = make_cyclic_code(n, f, DefiningSet(n, q, t));
                for (std::int64_t a = 1; a < n; ++a) {
                    if (std::gcd<std::int64_t>(a, n) != 1) {
                        continue;
                    }
                    EXPECT_TRUE(cs.is_closed(mu_apply(t, a, n)));
                    auto image = code_under_mu(code, a);
                    EXPECT_EQ(image.k(), code.k());
                }
                EXPECT_EQ(dual_defining_set(dual_defining_set(DefiningSet(n, q, t))).members(), t);
                auto even = even_like_subcode_by_intersection(code);
                EXPECT_TRUE(rank(even) == code.k() || rank(even) + 1 == code.k());
            }
        }
    }
}

TEST(DuadicProperties, EverySplittingIsValidAndSquaresFixSides) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        for (std::uint32_t n = 3; n <= 75; n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto all = find_splittings(n, q, 40);
            EXPECT_EQ(all.empty(), !oracle::naive_is_square(q % n, n)) << n << " " << q;
            for (const auto& s : all) {
                ASSERT_NO_THROW(validate(s));
                const std::int64_t a2 = std::int64_t{s.a} * s.a;
                EXPECT_EQ(mu_apply(s.s0, a2, n), s.s0);
                EXPECT_EQ(s.s0.size(), (n - 1) / 2);
            }
        }
    }
}

TEST(StabilizerProperties, SquareRootBoundsAndCrossChecks) {
    struct Case {
        std::uint32_t n;
        std::uint64_t q;
    };
    int built = 0;
    for (Case c : {Case{7, 2}, Case{17, 2}, Case{23, 2}, Case{31, 2}, Case{11, 3}, Case{13, 3}, Case{23, 3},
                   Case{5, 4}, Case{7, 4}, Case{11, 5}, Case{3, 7}}) {
        auto f = make_field_of_order(c.q);
        for (const auto& s : find_splittings(c.n, c.q, 6)) {
            auto quartet = build_quartet(s, f);
            StabilizerParams p;
            ASSERT_NO_THROW(p = css_from_quartet(quartet)) << c.n << " " << c.q;
            ASSERT_TRUE(p.d.is_exact());
            const std::uint64_t d = p.d.value();
            EXPECT_EQ(p.k, 1U);
            EXPECT_EQ(d, p.d_partner.value());
            EXPECT_GE(d * d, c.n);
            if (mu_minus_one_gives(s)) {
                EXPECT_GE(d * d - d + 1, c.n);
            }
            if (p.d_direct) {
                EXPECT_EQ(p.d_direct->value(), d);
            }
            EXPECT_EQ(p.degenerate, p.purity.value() < d ? Degeneracy::kYes : Degeneracy::kNo);
            ++built;
        }
    }
    EXPECT_GT(built, 20);
}

TEST(StabilizerProperties, HermitianOverSquareFields) {
    for (std::uint64_t q : {2, 3}) {
        const std::uint64_t q2 = q * q;
        auto f = make_field_of_order(q2);
        for (std::uint32_t n = 3; n <= (q == 2 ? 21U : 13U); n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto s = splitting_by(n, q2, -static_cast<std::int64_t>(q));
            if (!s) {
                continue;
            }
            auto quartet = build_quartet(*s, f);
            auto p = hermitian_from_quartet(quartet);
            EXPECT_EQ(p.q, q);
            ASSERT_TRUE(p.d.is_exact());
            EXPECT_GE(p.d.value() * p.d.value(), n);
            ASSERT_TRUE(p.d_direct);
            EXPECT_EQ(p.d_direct->value(), p.d.value());
        }
    }
}

TEST(EnumerationProperties, WorkerCountNeverChangesParameters) {
    for (std::uint32_t n : {17U, 23U}) {
        auto quartet = build_quartet(find_splittings(n, 2, 1).front(), make_field(2, 1));
        StabilizerOptions one, many;
        many.distance.workers = 5;
        EXPECT_EQ(css_from_quartet(quartet, one), css_from_quartet(quartet, many));
    }
}

}  // namespace
}  // namespace qduadic
