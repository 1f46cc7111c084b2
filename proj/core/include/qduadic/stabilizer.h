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
#ifndef QDUADIC_STABILIZER_H
#define QDUADIC_STABILIZER_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qduadic/distance.h"
#include "qduadic/duadic.h"

namespace qduadic {

enum class Degeneracy { kYes, kNo, kUndecided };

std::string to_string(Degeneracy d);

/// How computed purity compares with a certificate's predicted bound.
enum class Reconciliation { kAgreement, kDiscrepancy, kUndetermined, kNotApplicable };

std::string to_string(Reconciliation r);

struct StabilizerOptions {
    DistanceOptions distance;
    /// Largest n for the direct difference-set cross-check.
    std::uint32_t cross_check_max_n = 31;
    /// Largest n for the matrix form of the Hermitian dual check.
    std::uint32_t matrix_check_max_n = 255;
    /// Throw ConsistencyError on a violated bound. When false the violation
    /// is left in bound_checks and notes for the caller to tally.
    bool strict = true;
};

/// Parameters [[n, k, d]]_q of a duadic quantum code. The quantum code is
/// never materialized.
struct StabilizerParams {
    std::uint32_t n = 0;
    std::size_t k = 0;
    std::uint64_t q = 0;  // base field of the quantum code
    Construction construction = Construction::kCss;
    DistanceResult d;          // min odd-like weight of D0
    DistanceResult d_partner;  // min odd-like weight of D1
    /// Direct min over the difference sets, when the cross-check ran.
    std::optional<DistanceResult> d_direct;
    /// Minimum weight of the classical codes generating the stabilizer.
    DistanceResult purity;
    Degeneracy degenerate = Degeneracy::kUndecided;
    SquareRootReport bound_checks;
    /// Hermitian only: C0^{perp h} = D0 by defining sets and by matrices.
    std::optional<bool> hermitian_dual_by_defining_sets;
    std::optional<bool> hermitian_dual_by_matrices;
    Reconciliation reconciliation = Reconciliation::kNotApplicable;
    std::vector<std::string> notes;

    bool operator==(const StabilizerParams&) const = default;
};

/// Degenerate iff purity < d with both exact; undecided otherwise.
Degeneracy degeneracy_of(const DistanceResult& d, const DistanceResult& purity);

/// CSS code from the nested pair C0 in D0 over GF(q). d is the odd-like
/// weight of D0; purity is min(d(C0), d(D0^perp)). Throws ConsistencyError on
/// any violated theorem-level invariant.
StabilizerParams css_from_quartet(const DuadicQuartet& quartet, const StabilizerOptions& options = {});

struct HermitianDualCheck {
    bool splitting_by_minus_q = false;
    bool by_defining_sets = false;
    std::optional<bool> by_matrices;
    bool ok() const { return splitting_by_minus_q && by_defining_sets && by_matrices.value_or(true); }
};

/// Checks C_i^{perp h} = D_i for both i.
HermitianDualCheck check_hermitian_dual(const DuadicQuartet& quartet, std::uint32_t matrix_check_max_n = 255);

/// Hermitian code from a quartet over GF(q^2). Throws NonexistenceError when
/// C0^{perp h} != D0.
StabilizerParams hermitian_from_quartet(const DuadicQuartet& quartet, const StabilizerOptions& options = {});

/// Interval parameters from the defining sets alone, for lengths whose
/// splitting field is out of reach. Lower bounds come from the BCH bound and
/// the square-root bound; upper bounds from the Singleton bound and from
/// codewords lifted from cyclic codes of length dividing n.
StabilizerParams theory_params(const Splitting& s, Construction construction, const StabilizerOptions& options = {});

/// Compares computed purity with the certificate's bound. Never changes d,
/// purity or the degeneracy verdict.
StabilizerParams degeneracy_verdict(StabilizerParams params, const DegeneracyCertificate& certificate);

}  // namespace qduadic

#endif  // QDUADIC_STABILIZER_H
