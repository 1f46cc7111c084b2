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

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qduadic/errors.h"
#include "qduadic/number_theory.h"

namespace qduadic {

namespace {

std::uint32_t reduce_mod(std::int64_t a, std::uint32_t n) {
    const std::int64_t nn = n;
    return static_cast<std::uint32_t>(((a % nn) + nn) % nn);
}

void require_length(std::uint32_t n, std::uint64_t q, const char* where) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument(std::string(where) + ": length " + std::to_string(n) + " must be odd and >= 3");
    }
    if (std::gcd<std::uint64_t>(n, q) != 1) {
        throw std::invalid_argument(std::string(where) + ": gcd(" + std::to_string(n) + ", " + std::to_string(q) +
                                    ") != 1");
    }
}

// Orbits of mu_a on the nonzero cosets, each listed from the coset with the
// smallest representative. Empty optional when some orbit has odd length.
std::optional<std::vector<std::vector<std::size_t>>> even_orbits(const CosetStructure& cs, std::uint32_t a) {
    const auto& cosets = cs.cosets();
    std::vector<bool> seen(cosets.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t c = 1; c < cosets.size(); ++c) {
        if (seen[c]) {
            continue;
        }
        std::vector<std::size_t> orbit;
        std::size_t cur = c;
        do {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = cs.coset_index(static_cast<std::uint32_t>(std::uint64_t{a} * cosets[cur].front() % cs.n()));
        } while (cur != c);
        if (orbit.size() % 2 != 0) {
            return std::nullopt;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

Splitting assemble(const CosetStructure& cs, std::uint32_t a, const std::vector<std::vector<std::size_t>>& orbits,
                   std::uint64_t flips) {
    Splitting s{cs.n(), cs.q(), {}, {}, a};
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        const bool flip = o < 64 && ((flips >> o) & 1U);
        for (std::size_t pos = 0; pos < orbits[o].size(); ++pos) {
            auto& side = ((pos % 2 == 0) != flip) ? s.s0 : s.s1;
            const auto& coset = cs.cosets()[orbits[o][pos]];
            side.insert(side.end(), coset.begin(), coset.end());
        }
    }
    std::sort(s.s0.begin(), s.s0.end());
    std::sort(s.s1.begin(), s.s1.end());
    return s;
}

bool is_odd_like(std::span<const Elem> word, const Field& field) { return !is_even_like(word, field); }

}  // namespace

std::string Splitting::id() const {
    // FNV-1a over (n, q, S0) as little-endian 64-bit words.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(n);
    mix(q);
    for (std::uint32_t r : s0) {
        mix(r);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void validate(const Splitting& s) {
    require_length(s.n, s.q, "validate");
    const std::string where = "splitting of " + std::to_string(s.n) + " over GF(" + std::to_string(s.q) + "): ";
    if (!std::is_sorted(s.s0.begin(), s.s0.end()) || !std::is_sorted(s.s1.begin(), s.s1.end())) {
        throw ConsistencyError(where + "residue sets must be sorted");
    }
    if (s.s0.size() != (s.n - 1) / 2 || s.s1.size() != (s.n - 1) / 2) {
        throw ConsistencyError(where + "|S0| and |S1| must equal (n-1)/2");
    }
    ResidueSet all;
    std::merge(s.s0.begin(), s.s0.end(), s.s1.begin(), s.s1.end(), std::back_inserter(all));
    ResidueSet expected(s.n - 1);
    std::iota(expected.begin(), expected.end(), 1U);
    if (all != expected) {
        throw ConsistencyError(where + "S0 and S1 must partition {1, ..., n-1}");
    }
    if (std::gcd<std::uint64_t>(s.a, s.n) != 1 || !gives_splitting(s, s.a)) {
        throw ConsistencyError(where + "mu_" + std::to_string(s.a) + " does not exchange S0 and S1");
    }
    CosetStructure cs(s.n, s.q);
    if (!cs.is_closed(s.s0) || !cs.is_closed(s.s1)) {
        throw ConsistencyError(where + "S0 and S1 must be unions of cyclotomic cosets");
    }
}

bool gives_splitting(const Splitting& s, std::int64_t a) {
    const std::uint32_t ar = reduce_mod(a, s.n);
    if (std::gcd<std::uint64_t>(ar, s.n) != 1) {
        return false;
    }
    return mu_apply(s.s0, ar, s.n) == s.s1 && mu_apply(s.s1, ar, s.n) == s.s0;
}

bool same_partition(const Splitting& x, const Splitting& y) {
    return x.n == y.n && x.q == y.q &&
           ((x.s0 == y.s0 && x.s1 == y.s1) || (x.s0 == y.s1 && x.s1 == y.s0));
}

Splitting swapped(const Splitting& s) { return {s.n, s.q, s.s1, s.s0, s.a}; }

std::optional<Splitting> splitting_by(std::uint32_t n, std::uint64_t q, std::int64_t a) {
    require_length(n, q, "splitting_by");
    const std::uint32_t ar = reduce_mod(a, n);
    if (std::gcd<std::uint64_t>(ar, n) != 1) {
        throw std::invalid_argument("splitting_by: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    CosetStructure cs(n, q);
    auto orbits = even_orbits(cs, ar);
    if (!orbits) {
        return std::nullopt;
    }
    return assemble(cs, ar, *orbits, 0);
}

std::vector<Splitting> find_splittings(std::uint32_t n, std::uint64_t q, std::size_t limit) {
    require_length(n, q, "find_splittings");
    std::vector<Splitting> out;
    if (limit == 0) {
        return out;
    }
    CosetStructure cs(n, q);
    for (std::uint32_t a = 2; a < n; ++a) {
        if (std::gcd<std::uint64_t>(a, n) != 1) {
            continue;
        }
        auto orbits = even_orbits(cs, a);
        if (!orbits) {
            continue;
        }
        const std::size_t r = orbits->size();
        const std::uint64_t count = r >= 64 ? UINT64_MAX : (std::uint64_t{1} << r);
        for (std::uint64_t flips = 0; flips < count; ++flips) {
            out.push_back(assemble(cs, a, *orbits, flips));
            if (out.size() >= limit) {
                return out;
            }
        }
    }
    return out;
}

bool duadic_exists(std::uint32_t n, std::uint64_t q) {
    require_length(n, q, "duadic_exists");
    return is_quadratic_residue(q, n);
}

DuadicQuartet build_quartet(const Splitting& s, const FieldPtr& field) {
    if (!field || field->order() != s.q) {
        throw std::invalid_argument("build_quartet: field " + (field ? field->name() : std::string("<null>")) +
                                    " does not have order " + std::to_string(s.q));
    }
    validate(s);
    auto with_zero = [](ResidueSet t) {
        t.insert(t.begin(), 0U);
        return t;
    };
    DuadicQuartet quartet{s,
                          make_cyclic_code(s.n, field, DefiningSet(s.n, s.q, s.s0)),
                          make_cyclic_code(s.n, field, DefiningSet(s.n, s.q, s.s1)),
                          make_cyclic_code(s.n, field, DefiningSet(s.n, s.q, with_zero(s.s0))),
                          make_cyclic_code(s.n, field, DefiningSet(s.n, s.q, with_zero(s.s1)))};
    const std::string where = "build_quartet(n=" + std::to_string(s.n) + "): ";
    for (const auto* pair : {&quartet.d0, &quartet.d1}) {
        if (pair->k() != (s.n + 1) / 2) {
            throw ConsistencyError(where + "odd-like code has dimension " + std::to_string(pair->k()));
        }
        if (!is_odd_like(pair->generator_matrix().row(0), *field)) {
            throw ConsistencyError(where + "odd-like code generator is even-like");
        }
    }
    for (const auto* c : {&quartet.c0, &quartet.c1}) {
        if (c->k() != (s.n - 1) / 2) {
            throw ConsistencyError(where + "even-like code has dimension " + std::to_string(c->k()));
        }
        for (std::size_t r = 0; r < c->k(); ++r) {
            if (!is_even_like(c->generator_matrix().row(r), *field)) {
                throw ConsistencyError(where + "even-like code has an odd-like generator row");
            }
        }
    }
    if (!is_subcode(quartet.c0, quartet.d0) || !is_subcode(quartet.c1, quartet.d1)) {
        throw ConsistencyError(where + "even-like code is not contained in its odd-like code");
    }
    return quartet;
}

DuadicQuartet swapped(const DuadicQuartet& quartet) {
    return {swapped(quartet.splitting), quartet.d1, quartet.d0, quartet.c1, quartet.c0};
}

std::string to_string(Construction c) { return c == Construction::kCss ? "css" : "hermitian"; }

Construction construction_from_string(const std::string& s) {
    if (s == "css") {
        return Construction::kCss;
    }
    if (s == "hermitian") {
        return Construction::kHermitian;
    }
    throw std::invalid_argument("unknown construction '" + s + "' (expected css or hermitian)");
}

std::string to_string(CheckOutcome c) {
    switch (c) {
        case CheckOutcome::kPass: return "pass";
        case CheckOutcome::kFail: return "fail";
        case CheckOutcome::kVacuous: return "vacuous";
        case CheckOutcome::kNotApplicable: return "not_applicable";
    }
    return "vacuous";
}

bool SquareRootReport::ok() const {
    return equal_odd_like != CheckOutcome::kFail && square_bound != CheckOutcome::kFail &&
           mu_minus_one_bound != CheckOutcome::kFail;
}

bool mu_minus_one_gives(const Splitting& s) { return gives_splitting(s, -1); }

SquareRootReport check_square_root_bound(const Splitting& s, const DistanceResult& d0, const DistanceResult& d1) {
    SquareRootReport report;
    if (d0.is_exact() && d1.is_exact()) {
        report.equal_odd_like = d0.lo == d1.lo ? CheckOutcome::kPass : CheckOutcome::kFail;
    } else {
        const bool disjoint = d0.hi < d1.lo || d1.hi < d0.lo;
        report.equal_odd_like = disjoint ? CheckOutcome::kFail : CheckOutcome::kVacuous;
    }
    // Both bounds are monotone in d, so the interval ends decide them.
    auto judge = [&](auto holds) {
        const std::uint64_t lo = std::max(d0.lo, d1.lo);
        const std::uint64_t hi = std::min(d0.hi, d1.hi);
        if (holds(lo)) {
            return CheckOutcome::kPass;
        }
        if (!holds(hi)) {
            return CheckOutcome::kFail;
        }
        return CheckOutcome::kVacuous;
    };
    const std::uint64_t n = s.n;
    report.square_bound = judge([n](std::uint64_t d) { return d * d >= n; });
    report.mu_minus_one_splits = mu_minus_one_gives(s);
    report.mu_minus_one_bound = report.mu_minus_one_splits
                                    ? judge([n](std::uint64_t d) { return d * d - d + 1 >= n; })
                                    : CheckOutcome::kNotApplicable;
    return report;
}

DegeneracyCertificate degeneracy_certificate(std::uint64_t n, std::uint64_t q, Construction construction) {
    if (n < 3 || n % 2 == 0 || n > UINT32_MAX) {
        throw std::invalid_argument("degeneracy_certificate: length " + std::to_string(n) + " must be odd, >= 3");
    }
    if (std::gcd(n, q) != 1) {
        throw std::invalid_argument("degeneracy_certificate: gcd(" + std::to_string(n) + ", " + std::to_string(q) +
                                    ") != 1");
    }
    const bool hermitian = construction == Construction::kHermitian;
    const std::uint64_t base = hermitian ? checked_pow(q, 2) : q;

    DegeneracyCertificate cert;
    cert.n = n;
    cert.q = q;
    cert.construction = construction;
    cert.order_n_q = multiplicative_order_mod(q % n, n);
    cert.order_n_q_odd = cert.order_n_q % 2 == 1;
    cert.q_square_mod_every_prime = true;
    cert.m_exceeds_2z_everywhere = true;
    cert.every_prime_minus_one_mod_4 = true;
    cert.purity_bound = UINT64_MAX;
    for (const auto& f : factorize_trial(n)) {
        PrimeCertificate pc;
        pc.p = f.prime;
        pc.m = f.exponent;
        pc.t = multiplicative_order_mod(base % f.prime, f.prime);
        pc.z = valuation_of_power_minus_one(base, pc.t, f.prime);
        pc.p_pow_z = checked_pow(f.prime, pc.z);
        pc.q_square_mod_p = is_quadratic_residue(q, static_cast<std::uint32_t>(f.prime));
        pc.m_exceeds_2z = pc.m > 2 * pc.z;
        pc.p_is_minus_one_mod_4 = f.prime % 4 == 3;
        cert.q_square_mod_every_prime = cert.q_square_mod_every_prime && pc.q_square_mod_p;
        cert.m_exceeds_2z_everywhere = cert.m_exceeds_2z_everywhere && pc.m_exceeds_2z;
        cert.every_prime_minus_one_mod_4 = cert.every_prime_minus_one_mod_4 && pc.p_is_minus_one_mod_4;
        cert.purity_bound = std::min(cert.purity_bound, pc.p_pow_z);
        cert.primes.push_back(pc);
    }
    cert.example_clause = !hermitian && q == 2 && cert.primes.size() == 1 && cert.primes[0].p == 7 &&
                          cert.primes[0].m >= 2;
    cert.hypotheses_met = hermitian ? (cert.order_n_q_odd && cert.every_prime_minus_one_mod_4 &&
                                       cert.m_exceeds_2z_everywhere)
                                    : (cert.q_square_mod_every_prime && cert.m_exceeds_2z_everywhere);
    cert.purity_bound_below_sqrt_n = cert.purity_bound <= n / cert.purity_bound && cert.purity_bound * cert.purity_bound < n;
    return cert;
}

}  // namespace qduadic
