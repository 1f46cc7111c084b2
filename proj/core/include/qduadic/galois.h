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
#ifndef QDUADIC_GALOIS_H
#define QDUADIC_GALOIS_H

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace qduadic {

/// Field elements are indices into the additive group: the element
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} of GF(p)[x]/(f) has index sum c_i p^i.
/// For p = 2 the index bits are the polynomial coefficients, so addition is XOR.
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with a canonical modulus and generator.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m (coefficients compared from degree m-1 down to 0) and the
/// generator is the smallest index of multiplicative order p^m - 1, so two
/// builds always agree on every element.
///
/// Fields up to kTableCap elements carry log/antilog tables. Larger fields (up
/// to 2^62 elements) use direct polynomial arithmetic; they exist so that the
/// splitting field of x^n - 1 can be reached for every length the tools
/// handle, e.g. GF(2^21) for n = 49.
class Field {
   public:
    static constexpr std::uint64_t kTableCap = std::uint64_t{1} << 20;
    static constexpr unsigned kMaxOrderBits = 62;

    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }
    /// Monic modulus, lowest degree first (size m + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }
    bool has_tables() const { return !log_.empty(); }
    std::string name() const;

    bool contains(Elem x) const { return x < order_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// The image of the integer c in the prime subfield.
    Elem from_integer(std::int64_t c) const;

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// x -> x^q. Requires order() == q * q with q a power of p. Involutive.
    Elem frobenius(Elem x, std::uint64_t q) const;

    /// Discrete log to the canonical generator (table fields only).
    std::uint64_t log(Elem x) const;
    Elem antilog(std::uint64_t e) const;

    std::uint64_t multiplicative_order(Elem x) const;

    std::vector<std::uint32_t> coefficients(Elem x) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

   private:
    friend FieldPtr make_field(std::uint32_t p, unsigned m);
    Field(std::uint32_t p, unsigned m);

    Elem poly_mul(Elem a, Elem b) const;
    Elem slow_pow(Elem a, std::uint64_t e) const;

    std::uint32_t p_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t modulus_bits_ = 0;  // p == 2 only
    Elem generator_ = 1;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;  // doubled, so log a + log b needs no reduction
    std::vector<std::uint64_t> factors_of_group_order_;
};

/// Canonical GF(p^m). Deterministic and cached; the returned object is
/// immutable and may be shared across threads.
FieldPtr make_field(std::uint32_t p, unsigned m);
/// Canonical GF(q) for a prime power q.
FieldPtr make_field_of_order(std::uint64_t q);

/// An element bound to its field. Arithmetic between values of different
/// fields throws std::invalid_argument.
class FieldValue {
   public:
    FieldValue(FieldPtr field, Elem value);

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldValue operator+(const FieldValue& other) const;
    FieldValue operator-(const FieldValue& other) const;
    FieldValue operator-() const;
    FieldValue operator*(const FieldValue& other) const;
    FieldValue operator/(const FieldValue& other) const;
    FieldValue inv() const;
    FieldValue pow(std::uint64_t e) const;
    FieldValue frobenius(std::uint64_t q) const;

    bool operator==(const FieldValue& other) const;

   private:
    const Field& same_field(const FieldValue& other) const;

    FieldPtr field_;
    Elem value_;
};

/// Polynomial over a Field, lowest degree first; never has a zero leading
/// coefficient.
class Poly {
   public:
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
    /// x^n - 1
    static Poly x_pow_minus_one(FieldPtr field, std::size_t n);
    /// x - root
    static Poly linear(FieldPtr field, Elem root);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Elem eval(Elem x) const;
    Poly operator*(const Poly& other) const;
    Poly operator+(const Poly& other) const;
    /// Quotient and remainder; throws std::domain_error on division by zero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    bool operator==(const Poly& other) const;

   private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Field homomorphism GF(q) -> GF(q^t) between canonical fields. The image of
/// the base variable x is the smallest-index root of the base modulus inside
/// the extension.
class Embedding {
   public:
    Embedding(FieldPtr base, FieldPtr ext);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    Elem embed(Elem x) const { return image_[x]; }
    /// Preimage, or nullopt when y lies outside the embedded subfield.
    std::optional<Elem> project(Elem y) const;
    Poly embed(const Poly& poly) const;

   private:
    FieldPtr base_;
    FieldPtr ext_;
    std::vector<Elem> image_;
    std::unordered_map<Elem, Elem> preimage_;
};

struct NthRoot {
    FieldPtr base;
    FieldPtr field;   // GF(q^t), t = ord_n(q)
    unsigned degree;  // t
    Elem alpha;       // gamma^((q^t - 1) / n), multiplicative order exactly n
};

/// Primitive n-th root of unity over GF(q) in its splitting field.
/// Throws std::invalid_argument if gcd(n, q) != 1 and FieldTooLargeError when
/// GF(q^t) exceeds the supported field size.
NthRoot primitive_nth_root(std::uint64_t n, const FieldPtr& base);
NthRoot primitive_nth_root(std::uint64_t n, std::uint64_t base_order);

/// Re-expresses a polynomial over GF(q^t) as one over GF(q). Throws
/// ConsistencyError if some coefficient is not fixed by x -> x^q.
Poly coerce_to_base(const Poly& poly, const Embedding& embedding);
Poly coerce_to_base(const Poly& poly, const FieldPtr& base);

}  // namespace qduadic

#endif  // QDUADIC_GALOIS_H
