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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qduadic/errors.h"
#include "qduadic/number_theory.h"

namespace qduadic {

namespace {

std::uint32_t reduce_mod(std::int64_t a, std::uint32_t n) {
    const std::int64_t nn = n;
    return static_cast<std::uint32_t>(((a % nn) + nn) % nn);
}

void require_odd_coprime(std::uint32_t n, std::uint64_t q, const char* where) {
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument(std::string(where) + ": length " + std::to_string(n) + " must be odd");
    }
    if (std::gcd<std::uint64_t>(n, q) != 1) {
        throw std::invalid_argument(std::string(where) + ": gcd(" + std::to_string(n) + ", " + std::to_string(q) +
                                    ") != 1");
    }
}

}  // namespace

std::uint64_t ord_mod(std::uint64_t n, std::uint64_t a) {
    if (n == 0) {
        throw std::invalid_argument("ord_mod: modulus must be positive");
    }
    return multiplicative_order_mod(a, n);
}

std::vector<std::uint32_t> square_roots_mod(std::uint64_t q, std::uint32_t n) {
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument("square_roots_mod: modulus " + std::to_string(n) + " must be odd");
    }
    if (std::gcd<std::uint64_t>(q, n) != 1) {
        throw std::invalid_argument("square_roots_mod: gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
    }
    const std::uint64_t target = q % n;
    std::vector<std::uint32_t> roots;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (x * x % n == target) {
            roots.push_back(static_cast<std::uint32_t>(x));
        }
    }
    return roots;
}

bool is_quadratic_residue(std::uint64_t q, std::uint32_t n) { return !square_roots_mod(q, n).empty(); }

ResidueSet mu_apply(std::span<const std::uint32_t> residues, std::int64_t a, std::uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("mu_apply: modulus must be positive");
    }
    const std::uint32_t ar = reduce_mod(a, n);
    if (std::gcd<std::uint64_t>(ar, n) != 1 && n != 1) {
        throw std::invalid_argument("mu_apply: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    ResidueSet out;
    out.reserve(residues.size());
    for (std::uint32_t t : residues) {
        out.push_back(static_cast<std::uint32_t>(std::uint64_t{ar} * t % n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CosetStructure::CosetStructure(std::uint32_t n, std::uint64_t q) : n_(n), q_(q) {
    require_odd_coprime(n, q, "cyclotomic_cosets");
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    index_of_.assign(n, kUnassigned);
    const std::uint64_t qr = q % n;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (index_of_[start] != kUnassigned) {
            continue;
        }
        ResidueSet coset;
        std::uint64_t x = start;
        do {
            index_of_[x] = cosets_.size();
            coset.push_back(static_cast<std::uint32_t>(x));
            x = x * qr % n;
        } while (x != start);
        std::sort(coset.begin(), coset.end());
        cosets_.push_back(std::move(coset));
    }
}

bool CosetStructure::is_closed(std::span<const std::uint32_t> residues) const {
    std::vector<std::size_t> hits(cosets_.size(), 0);
    for (std::uint32_t r : residues) {
        if (r >= n_) {
            return false;
        }
        ++hits[index_of_[r]];
    }
    for (std::size_t i = 0; i < cosets_.size(); ++i) {
        if (hits[i] != 0 && hits[i] != cosets_[i].size()) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> CosetStructure::representatives(std::span<const std::uint32_t> residues) const {
    std::vector<std::uint32_t> reps;
    for (std::uint32_t r : residues) {
        if (cosets_[index_of_[r]].front() == r) {
            reps.push_back(r);
        }
    }
    return reps;
}

CosetStructure cyclotomic_cosets(std::uint32_t n, std::uint64_t q) { return CosetStructure(n, q); }

DefiningSet::DefiningSet(std::uint32_t n, std::uint64_t q, ResidueSet members)
    : n_(n), q_(q), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    CosetStructure cosets(n, q);
    if (!cosets.is_closed(members_)) {
        throw std::invalid_argument("DefiningSet: residues are not a union of " + std::to_string(q) +
                                    "-ary cyclotomic cosets modulo " + std::to_string(n));
    }
}

bool DefiningSet::contains(std::uint32_t j) const { return std::binary_search(members_.begin(), members_.end(), j); }

namespace {

ResidueSet complement(const DefiningSet& t) {
    ResidueSet out;
    for (std::uint32_t j = 0; j < t.n(); ++j) {
        if (!t.contains(j)) {
            out.push_back(j);
        }
    }
    return out;
}

}  // namespace

std::uint64_t exact_sqrt(std::uint64_t q) {
    auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<long double>(q))));
    for (std::uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
        if (c * c == q) {
            return c;
        }
    }
    return 0;
}

DefiningSet dual_defining_set(const DefiningSet& t) {
    return DefiningSet(t.n(), t.q(), mu_apply(complement(t), -1, t.n()));
}

DefiningSet hermitian_dual_defining_set(const DefiningSet& t) {
    const std::uint64_t q = exact_sqrt(t.q());
    if (q < 2) {
        throw std::invalid_argument("hermitian_dual_defining_set: field order " + std::to_string(t.q()) +
                                    " is not a square");
    }
    return DefiningSet(t.n(), t.q(), mu_apply(complement(t), -static_cast<std::int64_t>(q % t.n()), t.n()));
}

CyclicCode::CyclicCode(std::uint32_t n, FieldPtr field, DefiningSet t, Poly genpoly, Poly checkpoly, Matrix g,
                       Matrix h)
    : n_(n),
      k_(g.rows()),
      field_(std::move(field)),
      defining_set_(std::move(t)),
      genpoly_(std::move(genpoly)),
      checkpoly_(std::move(checkpoly)),
      generator_(std::move(g)),
      check_(std::move(h)) {}

bool CyclicCode::contains(std::span<const Elem> word) const {
    if (word.size() != n_) {
        return false;
    }
    auto syndrome = check_.apply(word);
    return std::all_of(syndrome.begin(), syndrome.end(), [](Elem x) { return x == 0; });
}

CyclicCode make_cyclic_code(std::uint32_t n, const FieldPtr& field, const DefiningSet& t) {
    if (t.n() != n || t.q() != field->order()) {
        throw std::invalid_argument("make_cyclic_code: defining set does not match length and field");
    }
    NthRoot root = primitive_nth_root(n, field);
    const Field& ext = *root.field;

    Poly product = Poly::one(root.field);
    for (std::uint32_t j : t.members()) {
        product = product * Poly::linear(root.field, ext.pow(root.alpha, j));
    }
    Poly genpoly = coerce_to_base(product, Embedding(field, root.field));

    auto [checkpoly, remainder] = Poly::x_pow_minus_one(field, n).divmod(genpoly);
    if (!remainder.is_zero()) {
        throw ConsistencyError("make_cyclic_code: generator polynomial does not divide x^n - 1");
    }

    const std::size_t k = n - t.size();
    Matrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < genpoly.coefficients().size(); ++i) {
            g.set(r, r + i, genpoly.coefficients()[i]);
        }
    }
    // Row i of H is x^i h*(x), h* the reciprocal of the check polynomial.
    Matrix h(field, n - k, n);
    const auto& hc = checkpoly.coefficients();
    for (std::size_t r = 0; r < n - k; ++r) {
        for (std::size_t i = 0; i < hc.size(); ++i) {
            h.set(r, r + i, hc[hc.size() - 1 - i]);
        }
    }
    return CyclicCode(n, field, t, std::move(genpoly), std::move(checkpoly), std::move(g), std::move(h));
}

CyclicCode code_under_mu(const CyclicCode& c, std::int64_t a) {
    const std::uint32_t n = c.n();
    const std::uint32_t ar = reduce_mod(a, n);
    if (std::gcd<std::uint64_t>(ar, n) != 1 && n != 1) {
        throw std::invalid_argument("code_under_mu: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    const auto a_inv = static_cast<std::int64_t>(n == 1 ? 0 : inverse_mod(ar, n));
    DefiningSet image(n, c.defining_set().q(), mu_apply(c.defining_set().members(), a_inv, n));
    return make_cyclic_code(n, c.field(), image);
}

CyclicCode euclidean_dual(const CyclicCode& c) {
    Matrix kernel = null_space(c.generator_matrix());
    CyclicCode dual = make_cyclic_code(c.n(), c.field(), dual_defining_set(c.defining_set()));
    if (!same_row_space(kernel, dual.generator_matrix())) {
        throw ConsistencyError("euclidean_dual: null space disagrees with the dual defining set");
    }
    return dual;
}

CyclicCode hermitian_dual(const CyclicCode& c) {
    const std::uint64_t q = exact_sqrt(c.field()->order());
    if (q < 2) {
        throw std::invalid_argument("hermitian_dual: " + c.field()->name() + " does not have square order");
    }
    Matrix kernel = null_space(conjugate(c.generator_matrix(), q));
    CyclicCode dual = make_cyclic_code(c.n(), c.field(), hermitian_dual_defining_set(c.defining_set()));
    if (!same_row_space(kernel, dual.generator_matrix())) {
        throw ConsistencyError("hermitian_dual: null space disagrees with the Hermitian dual defining set");
    }
    return dual;
}

DefiningSet defining_set_of_span(const Matrix& rows, std::uint32_t n) {
    if (rows.cols() != n) {
        throw std::invalid_argument("defining_set_of_span: column count must equal n");
    }
    const FieldPtr& base = rows.field();
    NthRoot root = primitive_nth_root(n, base);
    Embedding emb(base, root.field);
    const Field& ext = *root.field;
    ResidueSet roots;
    Elem point = 1;  // alpha^j
    for (std::uint32_t j = 0; j < n; ++j, point = ext.mul(point, root.alpha)) {
        bool common = true;
        for (std::size_t r = 0; r < rows.rows() && common; ++r) {
            Elem acc = 0;
            for (std::size_t i = n; i-- > 0;) {
                acc = ext.add(ext.mul(acc, point), emb.embed(rows.at(r, i)));
            }
            common = acc == 0;
        }
        if (common) {
            roots.push_back(j);
        }
    }
    return DefiningSet(n, base->order(), std::move(roots));
}

bool is_even_like(std::span<const Elem> word, const Field& field) {
    Elem sum = 0;
    for (Elem x : word) {
        sum = field.add(sum, x);
    }
    return sum == 0;
}

Matrix even_like_subcode_by_intersection(const CyclicCode& c) {
    Matrix constraints = c.check_matrix();
    std::vector<Elem> ones(c.n(), 1);
    constraints.append_row(ones);
    return null_space(constraints);
}

bool is_subcode(const CyclicCode& c, const CyclicCode& d) {
    if (c.n() != d.n() || c.field()->order() != d.field()->order()) {
        return false;
    }
    return c.generator_polynomial().divmod(d.generator_polynomial()).second.is_zero();
}

}  // namespace qduadic
