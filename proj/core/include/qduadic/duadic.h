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
#ifndef QDUADIC_DUADIC_H
#define QDUADIC_DUADIC_H

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qduadic/cyclic.h"
#include "qduadic/distance.h"
#include "qduadic/galois.h"

namespace qduadic {

/// A partition {S0, S1} of {1, ..., n-1} into unions of q-ary cyclotomic
/// cosets with a * S0 = S1 and a * S1 = S0 (mod n).
struct Splitting {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    ResidueSet s0;  // sorted
    ResidueSet s1;  // sorted
    std::uint32_t a = 0;

    /// Stable 16-hex-digit identifier of (n, q, S0). Multipliers giving the
    /// same oriented partition share an id.
    std::string id() const;

    bool operator==(const Splitting&) const = default;
};

/// Throws ConsistencyError unless every splitting invariant holds.
void validate(const Splitting& s);

/// True when mu_a exchanges S0 and S1.
bool gives_splitting(const Splitting& s, std::int64_t a);

/// True when both describe the same unordered pair {S0, S1}.
bool same_partition(const Splitting& x, const Splitting& y);

Splitting swapped(const Splitting& s);

/// The splitting with multiplier a, if mu_a has only even orbits on the
/// nonzero cosets. Cosets alternate along each orbit, starting with the
/// coset of smallest representative in S0.
std::optional<Splitting> splitting_by(std::uint32_t n, std::uint64_t q, std::int64_t a);

/// For each a = 2, ..., n-1 in turn, every alternate assignment of the mu_a
/// orbits, canonical assignment first. Stops after limit entries.
std::vector<Splitting> find_splittings(std::uint32_t n, std::uint64_t q,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Duadic codes of length n over GF(q) exist iff q is a square mod n.
bool duadic_exists(std::uint32_t n, std::uint64_t q);

/// D_i has defining set S_i and C_i has S_i with 0 added.
struct DuadicQuartet {
    Splitting splitting;
    CyclicCode d0;
    CyclicCode d1;
    CyclicCode c0;
    CyclicCode c1;
};

/// Builds and checks the four codes. Throws std::invalid_argument when the
/// field order differs from s.q.
DuadicQuartet build_quartet(const Splitting& s, const FieldPtr& field);

/// The quartet of the swapped splitting: (D0, C0) and (D1, C1) exchanged.
DuadicQuartet swapped(const DuadicQuartet& quartet);

enum class Construction { kCss, kHermitian };

std::string to_string(Construction c);
Construction construction_from_string(const std::string& s);

enum class CheckOutcome { kPass, kFail, kVacuous, kNotApplicable };

std::string to_string(CheckOutcome c);

/// Square-root bound checks on the odd-like weights of D0 and D1. Intervals
/// give kPass or kFail only when the whole interval decides the check.
struct SquareRootReport {
    CheckOutcome equal_odd_like = CheckOutcome::kVacuous;
    CheckOutcome square_bound = CheckOutcome::kVacuous;       // d^2 >= n
    CheckOutcome mu_minus_one_bound = CheckOutcome::kVacuous; // d^2 - d + 1 >= n
    bool mu_minus_one_splits = false;

    bool ok() const;
    bool operator==(const SquareRootReport&) const = default;
};

/// True when mu_{-1} exchanges S0 and S1.
bool mu_minus_one_gives(const Splitting& s);

SquareRootReport check_square_root_bound(const Splitting& s, const DistanceResult& d0, const DistanceResult& d1);

struct PrimeCertificate {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::uint64_t t = 0;  // ord_p(q), or ord_p(q^2) for the Hermitian case
    unsigned z = 0;       // p^z exactly divides q^t - 1 (resp. q^(2t) - 1)
    std::uint64_t p_pow_z = 1;
    bool q_square_mod_p = false;
    bool m_exceeds_2z = false;
    bool p_is_minus_one_mod_4 = false;

    bool operator==(const PrimeCertificate&) const = default;
};

/// Predicted purity of the degenerate families. It predicts a bound only; a
/// degeneracy verdict needs computed distances.
struct DegeneracyCertificate {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    Construction construction = Construction::kCss;
    std::vector<PrimeCertificate> primes;
    std::uint64_t purity_bound = 0;  // min p^z
    std::uint64_t order_n_q = 0;     // ord_n(q)
    bool q_square_mod_every_prime = false;
    bool m_exceeds_2z_everywhere = false;
    bool every_prime_minus_one_mod_4 = false;
    bool order_n_q_odd = false;
    /// n = 7^m with m >= 2 and q = 2: the binary length-7^m family.
    bool example_clause = false;
    /// All hypotheses of the degenerate-family theorem for this construction.
    bool hypotheses_met = false;
    bool purity_bound_below_sqrt_n = false;

    bool operator==(const DegeneracyCertificate&) const = default;
};

/// Throws std::invalid_argument for even n, gcd(n, q) != 1, or n above the
/// trial-division cap.
DegeneracyCertificate degeneracy_certificate(std::uint64_t n, std::uint64_t q, Construction construction);

}  // namespace qduadic

#endif  // QDUADIC_DUADIC_H
