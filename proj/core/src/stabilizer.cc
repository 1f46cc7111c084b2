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

#include "qduadic/stabilizer.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qduadic/errors.h"
#include "qduadic/linalg.h"

namespace qduadic {

namespace {

std::uint64_t smallest_root_bound(std::uint64_t n, bool mu_minus_one) {
    std::uint64_t d = 1;
    while (mu_minus_one ? d * d - d + 1 < n : d * d < n) {
        ++d;
    }
    return d;
}

std::string describe(const std::string& what, const DistanceResult& r) {
    return what + " is " + to_string(r.kind) + " [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
           "] via " + to_string(r.method) + " after " + std::to_string(r.work) + " steps";
}

void finish(StabilizerParams& params, const Splitting& s, bool strict) {
    params.degenerate = degeneracy_of(params.d, params.purity);
    params.bound_checks = check_square_root_bound(s, params.d, params.d_partner);
    if (!params.bound_checks.ok()) {
        std::string message("square-root bound violated at n=" + std::to_string(params.n) + ": equal " +
                               to_string(params.bound_checks.equal_odd_like) + ", d^2 >= n " +
                               to_string(params.bound_checks.square_bound) + ", d^2 - d + 1 >= n " +
                               to_string(params.bound_checks.mu_minus_one_bound));
        if (strict) {
            throw ConsistencyError(message);
        }
        params.notes.push_back(message);
    }
    if (params.d_direct && params.d_direct->is_exact() && params.d.is_exact() &&
        params.d_direct->lo != params.d.lo) {
        std::string message("n=" + std::to_string(params.n) + ": odd-like weight " + std::to_string(params.d.lo) +
                            " disagrees with the difference-set minimum " + std::to_string(params.d_direct->lo));
        if (strict) {
            throw ConsistencyError(message);
        }
        params.notes.push_back(message);
    }
    if (!params.d.is_exact()) {
        params.notes.push_back(describe("quantum distance", params.d));
    }
    if (!params.purity.is_exact()) {
        params.notes.push_back(describe("purity", params.purity));
    }
}

std::vector<std::uint32_t> proper_divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 3; m < n; m += 2) {
        if (n % m == 0) {
            out.push_back(m);
        }
    }
    return out;
}

// Upper bound on the minimum (odd-like) weight of the length-n code with
// defining set t over GF(q): a codeword c' of the length-m code with
// defining set t mod m gives c'(x^(n/m)) in an equivalent copy of that code.
std::optional<std::uint64_t> lifted_bound(std::uint32_t n, std::uint64_t q, const ResidueSet& t, bool odd_like,
                                          const DistanceOptions& options, std::uint64_t& work) {
    std::optional<std::uint64_t> best;
    for (std::uint32_t m : proper_divisors(n)) {
        ResidueSet reduced;
        for (std::uint32_t j : t) {
            reduced.push_back(j % m);
        }
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        if (reduced.size() >= m || (odd_like && !reduced.empty() && reduced.front() == 0)) {
            continue;
        }
        try {
            CyclicCode code = make_cyclic_code(m, make_field_of_order(q), DefiningSet(m, q, reduced));
            DistanceResult r = odd_like ? min_odd_like_weight(code, options) : min_weight(code, options);
            work += r.work;
            if (!best || r.hi < *best) {
                best = r.hi;
            }
        } catch (const FieldTooLargeError&) {
            continue;
        }
    }
    return best;
}

DistanceResult theory_distance(std::uint32_t n, std::uint64_t q, const ResidueSet& t, bool odd_like,
                               std::uint64_t extra_lo, const DistanceOptions& options) {
    DefiningSet ds(n, q, t);
    const std::uint64_t k = n - t.size();
    std::uint64_t work = 0;
    const std::uint64_t lo = std::max(bch_bound(ds), extra_lo);
    std::uint64_t hi = n - k + 1;
    if (auto lifted = lifted_bound(n, q, t, odd_like, options, work)) {
        hi = std::min(hi, *lifted);
    }
    if (lo > hi) {
        throw ConsistencyError("theory bounds cross at n=" + std::to_string(n) + ": [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
    }
    DistanceResult r;
    r.kind = lo == hi ? DistanceKind::kExact : DistanceKind::kInterval;
    r.lo = lo;
    r.hi = hi;
    r.method = DistanceMethod::kDefiningSetTheory;
    r.work = work;
    return r;
}

ResidueSet with_zero(ResidueSet t) {
    t.insert(t.begin(), 0U);
    return t;
}

std::uint64_t base_order(const Splitting& s, Construction construction) {
    if (construction == Construction::kCss) {
        return s.q;
    }
    const std::uint64_t q = exact_sqrt(s.q);
    if (q < 2) {
        throw std::invalid_argument("Hermitian construction needs a splitting over GF(q^2), got GF(" +
                                    std::to_string(s.q) + ")");
    }
    return q;
}

}  // namespace

std::string to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::kYes: return "yes";
        case Degeneracy::kNo: return "no";
        case Degeneracy::kUndecided: return "undecided";
    }
    return "undecided";
}

std::string to_string(Reconciliation r) {
    switch (r) {
        case Reconciliation::kAgreement: return "agreement";
        case Reconciliation::kDiscrepancy: return "discrepancy";
        case Reconciliation::kUndetermined: return "undetermined";
        case Reconciliation::kNotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

Degeneracy degeneracy_of(const DistanceResult& d, const DistanceResult& purity) {
    if (!d.is_exact() || !purity.is_exact()) {
        return Degeneracy::kUndecided;
    }
    return purity.lo < d.lo ? Degeneracy::kYes : Degeneracy::kNo;
}

StabilizerParams css_from_quartet(const DuadicQuartet& quartet, const StabilizerOptions& options) {
    const auto& dopt = options.distance;
    StabilizerParams params;
    params.n = quartet.splitting.n;
    params.q = quartet.splitting.q;
    params.construction = Construction::kCss;
    if (!is_subcode(quartet.c0, quartet.d0)) {
        throw ConsistencyError("css_from_quartet: C0 is not contained in D0");
    }
    params.k = quartet.d0.k() - quartet.c0.k();
    params.d = min_odd_like_weight(quartet.d0, dopt);
    params.d_partner = min_odd_like_weight(quartet.d1, dopt);

    const bool small = params.n <= options.matrix_check_max_n;
    CyclicCode d0_dual = small ? euclidean_dual(quartet.d0)
                               : make_cyclic_code(params.n, quartet.d0.field(),
                                                  dual_defining_set(quartet.d0.defining_set()));
    params.purity = min_of(min_weight(quartet.c0, dopt), min_weight(d0_dual, dopt));

    if (params.n <= options.cross_check_max_n) {
        CyclicCode c0_dual = euclidean_dual(quartet.c0);
        params.d_direct = min_of(min_weight_diffset(quartet.d0, quartet.c0, dopt),
                                 min_weight_diffset(c0_dual, d0_dual, dopt));
    }
    finish(params, quartet.splitting, options.strict);
    return params;
}

HermitianDualCheck check_hermitian_dual(const DuadicQuartet& quartet, std::uint32_t matrix_check_max_n) {
    const Splitting& s = quartet.splitting;
    const std::uint64_t q = base_order(s, Construction::kHermitian);
    HermitianDualCheck check;
    check.splitting_by_minus_q = gives_splitting(s, -static_cast<std::int64_t>(q % s.n));
    check.by_defining_sets =
        hermitian_dual_defining_set(quartet.c0.defining_set()) == quartet.d0.defining_set() &&
        hermitian_dual_defining_set(quartet.c1.defining_set()) == quartet.d1.defining_set();
    if (s.n <= matrix_check_max_n) {
        auto matches = [q](const CyclicCode& c, const CyclicCode& d) {
            return same_row_space(null_space(conjugate(c.generator_matrix(), q)), d.generator_matrix());
        };
        check.by_matrices = matches(quartet.c0, quartet.d0) && matches(quartet.c1, quartet.d1);
    }
    return check;
}

StabilizerParams hermitian_from_quartet(const DuadicQuartet& quartet, const StabilizerOptions& options) {
    const auto& dopt = options.distance;
    const Splitting& s = quartet.splitting;
    StabilizerParams params;
    params.n = s.n;
    params.q = base_order(s, Construction::kHermitian);
    params.construction = Construction::kHermitian;
    HermitianDualCheck check = check_hermitian_dual(quartet, options.matrix_check_max_n);
    params.hermitian_dual_by_defining_sets = check.by_defining_sets;
    params.hermitian_dual_by_matrices = check.by_matrices;
    if (!check.ok()) {
        throw NonexistenceError("hermitian_from_quartet: C0^{perp h} != D0 for splitting " + s.id() + " of n=" +
                                std::to_string(s.n) + " (mu_{-q} " +
                                (check.splitting_by_minus_q ? "splits" : "does not split") + ")");
    }
    params.k = quartet.d0.k() - quartet.c0.k();
    params.d = min_odd_like_weight(quartet.d0, dopt);
    params.d_partner = min_odd_like_weight(quartet.d1, dopt);
    params.purity = min_weight(quartet.c0, dopt);
    if (params.n <= options.cross_check_max_n) {
        params.d_direct = min_weight_diffset(quartet.d0, quartet.c0, dopt);
    }
    finish(params, s, options.strict);
    return params;
}

StabilizerParams theory_params(const Splitting& s, Construction construction, const StabilizerOptions& options) {
    validate(s);
    StabilizerParams params;
    params.n = s.n;
    params.q = base_order(s, construction);
    params.construction = construction;
    params.k = 1;
    if (construction == Construction::kHermitian) {
        const bool by_minus_q = gives_splitting(s, -static_cast<std::int64_t>(params.q % s.n));
        const bool by_sets = hermitian_dual_defining_set(DefiningSet(s.n, s.q, with_zero(s.s0))) ==
                             DefiningSet(s.n, s.q, s.s0);
        params.hermitian_dual_by_defining_sets = by_sets;
        if (!by_minus_q || !by_sets) {
            throw NonexistenceError("theory_params: mu_{-q} does not give splitting " + s.id() + " of n=" +
                                    std::to_string(s.n));
        }
    }
    const std::uint64_t root = smallest_root_bound(s.n, mu_minus_one_gives(s));
    params.d = theory_distance(s.n, s.q, s.s0, true, root, options.distance);
    params.d_partner = theory_distance(s.n, s.q, s.s1, true, root, options.distance);
    params.purity = theory_distance(s.n, s.q, with_zero(s.s0), false, 0, options.distance);
    if (construction == Construction::kCss) {
        ResidueSet dual = dual_defining_set(DefiningSet(s.n, s.q, s.s0)).members();
        params.purity = min_of(params.purity, theory_distance(s.n, s.q, dual, false, 0, options.distance));
        params.purity.method = DistanceMethod::kDefiningSetTheory;
        params.purity.kind = params.purity.lo == params.purity.hi ? DistanceKind::kExact : DistanceKind::kInterval;
    }
    params.notes.push_back("splitting field of length " + std::to_string(s.n) + " over GF(" + std::to_string(s.q) +
                           ") is too large; distances bounded from defining sets");
    finish(params, s, options.strict);
    return params;
}

StabilizerParams degeneracy_verdict(StabilizerParams params, const DegeneracyCertificate& certificate) {
    if (!certificate.hypotheses_met && !certificate.example_clause) {
        params.reconciliation = Reconciliation::kNotApplicable;
        return params;
    }
    const std::uint64_t bound = certificate.purity_bound;
    if (params.purity.hi <= bound) {
        params.reconciliation = Reconciliation::kAgreement;
    } else if (params.purity.lo > bound) {
        params.reconciliation = Reconciliation::kDiscrepancy;
        params.notes.push_back("computed purity " + std::to_string(params.purity.lo) + " exceeds predicted bound " +
                               std::to_string(bound));
    } else {
        params.reconciliation = Reconciliation::kUndetermined;
    }
    return params;
}

}  // namespace qduadic
