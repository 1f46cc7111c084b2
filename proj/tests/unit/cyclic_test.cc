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

#include "qduadic/cyclic.h"

#include <numeric>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles/oracles.h"

namespace qduadic {
namespace {

using Words = std::vector<std::vector<std::uint64_t>>;

Words all_codewords(const CyclicCode& c) {
    Words out;
    oracle::scan_codewords(c.generator_matrix(), [&](const std::vector<std::uint64_t>& w) { out.push_back(w); });
    return out;
}

// Every coset-closed defining set, as unions of cosets chosen by bitmask.
std::vector<ResidueSet> closed_sets(const CosetStructure& cs) {
    std::vector<ResidueSet> out;
    const auto& cosets = cs.cosets();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
        ResidueSet t;
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            if ((mask >> i) & 1) {
                t.insert(t.end(), cosets[i].begin(), cosets[i].end());
            }
        }
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

TEST(Cosets, SpecExamples) {
    auto c7 = cyclotomic_cosets(7, 2);
    EXPECT_EQ(c7.cosets(), (std::vector<ResidueSet>{{0}, {1, 2, 4}, {3, 5, 6}}));
    auto c3 = cyclotomic_cosets(3, 2);
    EXPECT_EQ(c3.cosets(), (std::vector<ResidueSet>{{0}, {1, 2}}));
    auto c11 = cyclotomic_cosets(11, 23);  // 23 = 1 mod 11
    EXPECT_EQ(c11.cosets().size(), 11U);
}

TEST(Cosets, PartitionAndClosureAgainstBruteOrbits) {
    for (std::uint32_t n = 3; n <= 101; n += 2) {
        for (std::uint64_t q : {2, 3, 4, 5, 9}) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto cs = cyclotomic_cosets(n, q);
            std::vector<int> hits(n, 0);
            for (std::size_t i = 0; i < cs.cosets().size(); ++i) {
                const auto& coset = cs.cosets()[i];
                EXPECT_TRUE(std::is_sorted(coset.begin(), coset.end()));
                if (i > 0) {
                    EXPECT_LT(cs.cosets()[i - 1].front(), coset.front());
                }
                for (auto r : coset) {
                    ++hits[r];
                    EXPECT_EQ(cs.coset_index(r), i);
                    EXPECT_TRUE(std::binary_search(coset.begin(), coset.end(), static_cast<std::uint32_t>(r * q % n)));
                }
                // Coset size is the orbit length of its representative.
                std::uint64_t len = 1;
                for (std::uint64_t x = coset.front() * q % n; x != coset.front(); x = x * q % n) {
                    ++len;
                }
                EXPECT_EQ(coset.size(), len);
            }
            EXPECT_EQ(cs.cosets().front(), ResidueSet{0});
            for (int h : hits) {
                EXPECT_EQ(h, 1);
            }
        }
    }
}

TEST(Cosets, RejectsBadLengths) {
    EXPECT_THROW(cyclotomic_cosets(8, 3), std::invalid_argument);
    EXPECT_THROW(cyclotomic_cosets(9, 3), std::invalid_argument);
    EXPECT_THROW(DefiningSet(7, 2, {1, 2}), std::invalid_argument);
}

TEST(NumberHelpers, OrderAndResidues) {
    EXPECT_EQ(ord_mod(7, 2), 3U);
    EXPECT_EQ(ord_mod(23, 2), 11U);
    EXPECT_EQ(ord_mod(15, 1), 1U);
    EXPECT_THROW(ord_mod(9, 3), std::invalid_argument);
    EXPECT_TRUE(is_quadratic_residue(2, 7));
    EXPECT_FALSE(is_quadratic_residue(2, 5));
    EXPECT_THROW(is_quadratic_residue(3, 9), std::invalid_argument);
    for (std::uint32_t n = 3; n <= 151; n += 2) {
        EXPECT_TRUE(is_quadratic_residue(1, n));
        for (std::uint64_t q : {2, 3, 5, 7}) {
            if (std::gcd<std::uint64_t>(n, q) == 1) {
                EXPECT_EQ(ord_mod(n, q), oracle::naive_order(q, n));
                EXPECT_EQ(is_quadratic_residue(q, n), oracle::naive_is_square(q, n)) << n << " " << q;
            }
        }
    }
    auto roots = square_roots_mod(2, 7);
    EXPECT_EQ(roots, (std::vector<std::uint32_t>{3, 4}));
}

TEST(MuApply, Examples) {
    EXPECT_EQ(mu_apply(ResidueSet{1, 2, 4}, 6, 7), (ResidueSet{3, 5, 6}));
    EXPECT_EQ(mu_apply(ResidueSet{1, 2, 4}, -1, 7), (ResidueSet{3, 5, 6}));
    EXPECT_EQ(mu_apply(ResidueSet{0, 3, 5}, 1, 9), (ResidueSet{0, 3, 5}));
    EXPECT_EQ(mu_apply(mu_apply(ResidueSet{1, 4, 6}, 4, 15), 4, 15), (ResidueSet{1, 4, 6}));  // 4^2 = 1 mod 15
    EXPECT_THROW(mu_apply(ResidueSet{1}, 3, 9), std::invalid_argument);
}

TEST(DualSets, Examples) {
    DefiningSet t(7, 2, {0, 1, 2, 4});
    EXPECT_EQ(dual_defining_set(t).members(), (ResidueSet{1, 2, 4}));
    EXPECT_EQ(dual_defining_set(DefiningSet(7, 2, {})).size(), 7U);
    EXPECT_EQ(dual_defining_set(DefiningSet(7, 2, {0, 1, 2, 3, 4, 5, 6})).size(), 0U);
    DefiningSet h(7, 4, {0, 1, 2, 4});
    EXPECT_EQ(hermitian_dual_defining_set(h).members(), (ResidueSet{1, 2, 4}));
    EXPECT_THROW(hermitian_dual_defining_set(DefiningSet(7, 2, {0})), std::invalid_argument);
}

TEST(CyclicCode, HammingGolden) {
    auto f = make_field(2, 1);
    auto hamming = make_cyclic_code(7, f, DefiningSet(7, 2, {1, 2, 4}));
    EXPECT_EQ(hamming.k(), 4U);
    // alpha is the canonical generator of GF(8) = GF(2)[x]/(x^3 + x + 1), so g = x^3 + x + 1.
    EXPECT_EQ(hamming.generator_polynomial().coefficients(), (std::vector<Elem>{1, 1, 0, 1}));
    auto words = all_codewords(hamming);
    auto hist = oracle::weight_distribution(words, 7);
    EXPECT_EQ(hist, (std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}));

    auto even = make_cyclic_code(7, f, DefiningSet(7, 2, {0, 1, 2, 4}));
    EXPECT_EQ(even.k(), 3U);
    EXPECT_EQ(oracle::weight_distribution(all_codewords(even), 7), (std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0}));
    EXPECT_EQ(even.generator_polynomial(), Poly(f, {1, 1}) * hamming.generator_polynomial());

    auto whole = make_cyclic_code(7, f, DefiningSet(7, 2, {}));
    EXPECT_EQ(whole.k(), 7U);
    EXPECT_EQ(whole.generator_polynomial(), Poly::one(f));
}

TEST(CyclicCode, MatchesBruteForceOracle) {
    struct Case {
        std::uint32_t n;
        std::uint64_t q;
    };
    for (Case c : {Case{7, 2}, Case{9, 2}, Case{15, 2}, Case{5, 4}, Case{7, 4}, Case{11, 3}, Case{7, 3}, Case{5, 9}}) {
        auto f = make_field_of_order(c.q);
        auto cs = cyclotomic_cosets(c.n, c.q);
        for (const auto& t : closed_sets(cs)) {
            auto code = make_cyclic_code(c.n, f, DefiningSet(c.n, c.q, t));
            auto brute = oracle::brute_code(c.n, c.q, t);
            auto words = all_codewords(code);
            ASSERT_EQ(words.size(), brute.size()) << c.n << " " << c.q;
            EXPECT_EQ(oracle::weight_distribution(words, c.n), oracle::weight_distribution(brute, c.n));
            EXPECT_EQ(code.k(), c.n - t.size());
        }
    }
}

TEST(CyclicCode, StructuralInvariants) {
    for (std::uint64_t q : {2, 3, 4}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n = 3; n <= 35; n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto cs = cyclotomic_cosets(n, q);
            if (cs.cosets().size() > 8) {
                continue;
            }
            for (const auto& t : closed_sets(cs)) {
                auto code = make_cyclic_code(n, f, DefiningSet(n, q, t));
                const auto& g = code.generator_polynomial();
                EXPECT_EQ(g.degree(), static_cast<int>(t.size()));
                EXPECT_EQ(g * code.check_polynomial(), Poly::x_pow_minus_one(f, n));
                EXPECT_EQ(code.generator_matrix().rows(), code.k());
                EXPECT_EQ(rank(code.generator_matrix()), code.k());
                if (code.k() > 0 && code.k() < n) {
                    EXPECT_TRUE((code.generator_matrix() * code.check_matrix().transpose()).is_zero());
                    for (std::size_t r = 0; r < code.k(); ++r) {
                        for (std::uint32_t i = 0; i < n; ++i) {
                            EXPECT_EQ(code.generator_matrix().at(r, i), i >= r ? g.coeff(i - r) : 0U);
                        }
                    }
                }
                EXPECT_EQ(defining_set_of_span(code.generator_matrix(), n).members(), t);
            }
        }
    }
}

TEST(CyclicCode, DualsMatchDefiningSetFormulas) {
    for (std::uint64_t q : {2, 3}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n = 3; n <= 35; n += 2) {
            if (std::gcd<std::uint64_t>(n, q) != 1 || cyclotomic_cosets(n, q).cosets().size() > 7) {
                continue;
            }
            for (const auto& t : closed_sets(cyclotomic_cosets(n, q))) {
                DefiningSet ts(n, q, t);
                auto code = make_cyclic_code(n, f, ts);
                auto dual = euclidean_dual(code);
                EXPECT_EQ(dual.defining_set(), dual_defining_set(ts));
                EXPECT_EQ(dual.k(), n - code.k());
                if (code.k() > 0 && dual.k() > 0) {
                    EXPECT_TRUE((code.generator_matrix() * dual.generator_matrix().transpose()).is_zero());
                }
                EXPECT_EQ(euclidean_dual(dual).defining_set(), ts);
            }
        }
    }
}

TEST(CyclicCode, HermitianDualOverGF4) {
    auto f = make_field(2, 2);
    for (std::uint32_t n : {3U, 5U, 7U, 9U, 11U, 13U, 15U}) {
        auto cs = cyclotomic_cosets(n, 4);
        if (cs.cosets().size() > 8) {
            continue;
        }
        for (const auto& t : closed_sets(cs)) {
            DefiningSet ts(n, 4, t);
            auto code = make_cyclic_code(n, f, ts);
            auto hd = hermitian_dual(code);
            EXPECT_EQ(hd.defining_set(), hermitian_dual_defining_set(ts));
            if (code.k() > 0 && hd.k() > 0) {
                EXPECT_TRUE((conjugate(code.generator_matrix(), 2) * hd.generator_matrix().transpose()).is_zero());
            }
        }
    }
    EXPECT_THROW(hermitian_dual(make_cyclic_code(7, make_field(2, 1), DefiningSet(7, 2, {0}))),
                 std::invalid_argument);
}

TEST(CyclicCode, HammingDualIsSimplex) {
    auto f = make_field(2, 1);
    auto dual = euclidean_dual(make_cyclic_code(7, f, DefiningSet(7, 2, {1, 2, 4})));
    EXPECT_EQ(dual.k(), 3U);
    EXPECT_EQ(oracle::weight_distribution(all_codewords(dual), 7), (std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0}));
}

TEST(CyclicCode, MuImagesHaveSameWeights) {
    auto f = make_field(2, 1);
    auto base = make_cyclic_code(7, f, DefiningSet(7, 2, {0, 1, 2, 4}));
    auto img = code_under_mu(base, 3);
    EXPECT_EQ(img.defining_set().members(), (ResidueSet{0, 3, 5, 6}));
    EXPECT_EQ(code_under_mu(base, 1).defining_set(), base.defining_set());
    EXPECT_THROW(code_under_mu(make_cyclic_code(9, f, DefiningSet(9, 2, {0})), 3), std::invalid_argument);

    for (std::uint32_t n : {15U, 17U, 21U}) {
        auto cs = cyclotomic_cosets(n, 2);
        for (const auto& t : closed_sets(cs)) {
            if (n - t.size() > 10) {
                continue;  // keep the enumerations small
            }
            auto code = make_cyclic_code(n, f, DefiningSet(n, 2, t));
            auto ref = oracle::weight_distribution(all_codewords(code), n);
            for (std::int64_t a = 2; a < n; ++a) {
                if (std::gcd<std::int64_t>(a, n) != 1) {
                    continue;
                }
                auto image = code_under_mu(code, a);
                EXPECT_EQ(image.k(), code.k());
                EXPECT_EQ(oracle::weight_distribution(all_codewords(image), n), ref);
            }
        }
    }
}

TEST(CyclicCode, EvenLikeSubcodeTwoWays) {
    for (std::uint64_t q : {2, 3, 4}) {
        auto f = make_field_of_order(q);
        for (std::uint32_t n : {7U, 11U, 13U, 17U}) {
            if (std::gcd<std::uint64_t>(n, q) != 1) {
                continue;
            }
            auto cs = cyclotomic_cosets(n, q);
            if (cs.cosets().size() > 6) {
                continue;
            }
            for (const auto& t : closed_sets(cs)) {
                if (t.empty() || t.front() == 0) {
                    continue;
                }
                auto code = make_cyclic_code(n, f, DefiningSet(n, q, t));
                ResidueSet with_zero = t;
                with_zero.insert(with_zero.begin(), 0);
                auto even = make_cyclic_code(n, f, DefiningSet(n, q, with_zero));
                EXPECT_TRUE(same_row_space(even.generator_matrix(), even_like_subcode_by_intersection(code)));
                EXPECT_TRUE(is_subcode(even, code));
                EXPECT_FALSE(is_subcode(code, even));
                for (std::size_t r = 0; r < even.k(); ++r) {
                    EXPECT_TRUE(is_even_like(even.generator_matrix().row(r), *f));
                }
                EXPECT_FALSE(is_even_like(code.generator_matrix().row(0), *f));
            }
        }
    }
}

TEST(CyclicCode, ContainsAndSquareRoots) {
    auto f = make_field(2, 1);
    auto hamming = make_cyclic_code(7, f, DefiningSet(7, 2, {1, 2, 4}));
    std::vector<Elem> row(hamming.generator_matrix().row(2).begin(), hamming.generator_matrix().row(2).end());
    EXPECT_TRUE(hamming.contains(row));
    row[0] ^= 1;
    EXPECT_FALSE(hamming.contains(row));
    EXPECT_EQ(exact_sqrt(49), 7U);
    EXPECT_EQ(exact_sqrt(1024), 32U);
    EXPECT_EQ(exact_sqrt(8), 0U);
}

}  // namespace
}  // namespace qduadic
