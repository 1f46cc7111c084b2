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
#ifndef QDUADIC_CYCLIC_H
#define QDUADIC_CYCLIC_H

#include <cstdint>
#include <span>
#include <vector>

#include "qduadic/galois.h"
#include "qduadic/linalg.h"

namespace qduadic {

/// Sorted set of residues modulo n.
using ResidueSet = std::vector<std::uint32_t>;

/// Smallest t >= 1 with a^t = 1 (mod n). Throws std::invalid_argument when
/// gcd(a, n) != 1.
std::uint64_t ord_mod(std::uint64_t n, std::uint64_t a);

/// All x in [0, n) with x^2 = q (mod n), ascending.
std::vector<std::uint32_t> square_roots_mod(std::uint64_t q, std::uint32_t n);

/// True iff q is a square modulo the odd integer n (decided exhaustively).
bool is_quadratic_residue(std::uint64_t q, std::uint32_t n);

/// { a t mod n : t in residues }, sorted. Throws if gcd(a, n) != 1.
ResidueSet mu_apply(std::span<const std::uint32_t> residues, std::int64_t a, std::uint32_t n);

/// q-ary cyclotomic cosets modulo n, ordered by smallest representative.
class CosetStructure {
   public:
    CosetStructure(std::uint32_t n, std::uint64_t q);

    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const std::vector<ResidueSet>& cosets() const { return cosets_; }
    std::size_t coset_index(std::uint32_t residue) const { return index_of_[residue]; }
    /// True when residues is a union of whole cosets.
    bool is_closed(std::span<const std::uint32_t> residues) const;
    /// Smallest representative of each coset contained in a closed set.
    std::vector<std::uint32_t> representatives(std::span<const std::uint32_t> residues) const;

   private:
    std::uint32_t n_;
    std::uint64_t q_;
    std::vector<ResidueSet> cosets_;
    std::vector<std::size_t> index_of_;
};

/// Throws std::invalid_argument if n is even or gcd(n, q) != 1.
CosetStructure cyclotomic_cosets(std::uint32_t n, std::uint64_t q);

/// Defining set of a q-ary cyclic code of length n: the exponents j such that
/// alpha^j is a root of every codeword polynomial. Always coset-closed.
class DefiningSet {
   public:
    /// Throws std::invalid_argument if members is not a union of q-ary
    /// cyclotomic cosets modulo n.
    DefiningSet(std::uint32_t n, std::uint64_t q, ResidueSet members);

    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const ResidueSet& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::uint32_t j) const;

    bool operator==(const DefiningSet&) const = default;

   private:
    std::uint32_t n_;
    std::uint64_t q_;
    ResidueSet members_;
};

/// { -t mod n : t in N \ T }, the defining set of the Euclidean dual.
DefiningSet dual_defining_set(const DefiningSet& t);

/// { -q t mod n : t in N \ T } for a code over GF(q^2); the defining set of
/// the Hermitian dual. Throws std::invalid_argument if the field order is not
/// a square.
DefiningSet hermitian_dual_defining_set(const DefiningSet& t);

/// A cyclic code with its generator polynomial and matrices. G has the cyclic
/// shifts of the generator polynomial as rows; H the shifts of the reciprocal
/// check polynomial.
class CyclicCode {
   public:
    std::uint32_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const FieldPtr& field() const { return field_; }
    const DefiningSet& defining_set() const { return defining_set_; }
    const Poly& generator_polynomial() const { return genpoly_; }
    const Poly& check_polynomial() const { return checkpoly_; }
    const Matrix& generator_matrix() const { return generator_; }
    const Matrix& check_matrix() const { return check_; }

    /// H c^T == 0
    bool contains(std::span<const Elem> word) const;

   private:
    friend CyclicCode make_cyclic_code(std::uint32_t n, const FieldPtr& field, const DefiningSet& t);
    CyclicCode(std::uint32_t n, FieldPtr field, DefiningSet t, Poly genpoly, Poly checkpoly, Matrix g, Matrix h);

    std::uint32_t n_;
    std::size_t k_;
    FieldPtr field_;
    DefiningSet defining_set_;
    Poly genpoly_;
    Poly checkpoly_;
    Matrix generator_;
    Matrix check_;
};

/// g(x) = prod_{j in T} (x - alpha^j) computed in the splitting field with the
/// canonical alpha, then coerced to the base field.
CyclicCode make_cyclic_code(std::uint32_t n, const FieldPtr& field, const DefiningSet& t);

/// C mu_a = { c(x^a) }, the cyclic code with defining set a^{-1} T.
CyclicCode code_under_mu(const CyclicCode& c, std::int64_t a);

/// Null space of G, cross-checked against dual_defining_set.
CyclicCode euclidean_dual(const CyclicCode& c);

/// Null space of the entrywise-conjugated G, cross-checked against
/// hermitian_dual_defining_set.
CyclicCode hermitian_dual(const CyclicCode& c);

/// Common roots (as exponents of the canonical alpha) of every row.
DefiningSet defining_set_of_span(const Matrix& rows, std::uint32_t n);

/// Coordinate sum is zero in the field.
bool is_even_like(std::span<const Elem> word, const Field& field);

/// The even-like subcode of c computed by matrix intersection (null space of H
/// stacked with the all-ones row); used to cross-check the defining-set route.
Matrix even_like_subcode_by_intersection(const CyclicCode& c);

/// c is a subcode of d: g_d divides g_c.
bool is_subcode(const CyclicCode& c, const CyclicCode& d);

/// Square root of a perfect-square prime power, or 0 if q is not a square.
std::uint64_t exact_sqrt(std::uint64_t q);

}  // namespace qduadic

#endif  // QDUADIC_CYCLIC_H
