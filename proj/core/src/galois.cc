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

#include "qduadic/galois.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qduadic/errors.h"
#include "qduadic/number_theory.h"

namespace qduadic {

namespace {

// Polynomials over the prime field GF(p), lowest degree first.
using Digits = std::vector<std::uint64_t>;

void trim_digits(Digits& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Digits digits_mod(Digits a, const Digits& f, std::uint64_t p) {
    trim_digits(a);
    const std::uint64_t lead_inv = inverse_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        }
        trim_digits(a);
    }
    return a;
}

Digits digits_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Digits prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    return digits_mod(std::move(prod), f, p);
}

Digits digits_powmod(Digits base, std::uint64_t e, const Digits& f, std::uint64_t p) {
    Digits result{1};
    while (e > 0) {
        if (e & 1) {
            result = digits_mulmod(result, base, f, p);
        }
        base = digits_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Digits digits_gcd(Digits a, Digits b, std::uint64_t p) {
    trim_digits(a);
    trim_digits(b);
    while (!b.empty()) {
        Digits r = digits_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^(p^k) - x) = 1 for k <= m/2.
bool is_irreducible(const Digits& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m <= 1) {
        return true;
    }
    if (f[0] == 0) {
        return false;
    }
    Digits h{0, 1};
    for (std::size_t k = 1; k <= m / 2; ++k) {
        h = digits_powmod(h, p, f, p);
        Digits diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        Digits g = digits_gcd(f, diff, p);
        if (g.size() > 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, unsigned m) : p_(p), m_(m) {
    order_ = checked_pow(p, m);
    const std::uint64_t group_order = order_ - 1;

    for (std::uint64_t v = 0; v < order_; ++v) {
        Digits f(m + 1, 0);
        f[m] = 1;
        std::uint64_t rest = v;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        if (is_irreducible(f, p)) {
            modulus_.assign(f.begin(), f.end());
            break;
        }
    }
    if (modulus_.empty()) {
        throw ConsistencyError("no irreducible polynomial found for " + name());
    }
    if (p_ == 2) {
        for (unsigned i = 0; i <= m_; ++i) {
            modulus_bits_ |= std::uint64_t{modulus_[i]} << i;
        }
    }

    if (group_order > 1) {
        for (const auto& factor : factorize(group_order)) {
            factors_of_group_order_.push_back(factor.prime);
        }
    }
    generator_ = 1;
    if (group_order > 1) {
        for (Elem c = 2; c < order_; ++c) {
            bool primitive = true;
            for (std::uint64_t r : factors_of_group_order_) {
                if (slow_pow(c, group_order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = c;
                break;
            }
        }
    }

    if (order_ <= kTableCap) {
        log_.assign(order_, 0);
        antilog_.assign(2 * group_order, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < group_order; ++i) {
            antilog_[i] = static_cast<std::uint32_t>(x);
            antilog_[i + group_order] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = poly_mul(x, generator_);
        }
        if (x != 1) {
            throw ConsistencyError("generator of " + name() + " does not cycle back to 1");
        }
    }
}

std::string Field::name() const {
    if (m_ == 1) {
        return "GF(" + std::to_string(p_) + ")";
    }
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

Elem Field::from_integer(std::int64_t c) const {
    const std::int64_t p = p_;
    return static_cast<Elem>(((c % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) {
        return a ^ b;
    }
    if (m_ == 1) {
        return (a + b) % p_;
    }
    Elem result = 0;
    Elem place = 1;
    while (a != 0 || b != 0) {
        result += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return result;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) {
        return a;
    }
    if (m_ == 1) {
        return (p_ - a % p_) % p_;
    }
    Elem result = 0;
    Elem place = 1;
    while (a != 0) {
        result += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return result;
}

Elem Field::poly_mul(Elem a, Elem b) const {
    if (p_ == 2) {
        Elem r = 0;
        for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
            r <<= 1;
            if ((r >> m_) & 1) {
                r ^= modulus_bits_;
            }
            if ((b >> i) & 1) {
                r ^= a;
            }
        }
        return r;
    }
    const std::uint64_t p = p_;
    if (m_ == 1) {
        return mul_mod(a, b, p);
    }
    std::vector<std::uint64_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for (std::size_t d = prod.size() - 1; d >= m_; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) {
            continue;
        }
        for (unsigned i = 0; i <= m_; ++i) {
            prod[d - m_ + i] = (prod[d - m_ + i] + p - c * modulus_[i] % p) % p;
        }
    }
    Elem result = 0;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        result = result * p + prod[i];
    }
    return result;
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e > 0) {
        if (e & 1) {
            result = poly_mul(result, a);
        }
        a = poly_mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    if (has_tables()) {
        return antilog_[log_[a] + log_[b]];
    }
    return poly_mul(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) {
        throw std::domain_error("inverse of zero in " + name());
    }
    const std::uint64_t group_order = order_ - 1;
    if (has_tables()) {
        return antilog_[(group_order - log_[a]) % group_order];
    }
    return slow_pow(a, group_order - 1);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    const std::uint64_t group_order = order_ - 1;
    if (has_tables()) {
        return antilog_[mul_mod(log_[a], e % group_order, group_order)];
    }
    return slow_pow(a, e % group_order == 0 ? group_order : e % group_order);
}

Elem Field::frobenius(Elem x, std::uint64_t q) const {
    std::uint64_t power = 1;
    while (power < q && power <= order_) {
        power *= p_;
    }
    if (q < 2 || power != q || q > order_ / q || q * q != order_) {
        throw std::invalid_argument("frobenius: " + name() + " is not GF(" + std::to_string(q) + "^2)");
    }
    return pow(x, q);
}

std::uint64_t Field::log(Elem x) const {
    if (!has_tables()) {
        throw std::logic_error("log: " + name() + " has no log tables");
    }
    if (x == 0 || x >= order_) {
        throw std::domain_error("log: argument is zero or not in " + name());
    }
    return log_[x];
}

Elem Field::antilog(std::uint64_t e) const {
    if (has_tables()) {
        return antilog_[e % (order_ - 1)];
    }
    return pow(generator_, e);
}

std::uint64_t Field::multiplicative_order(Elem x) const {
    if (x == 0) {
        throw std::domain_error("multiplicative_order of zero");
    }
    std::uint64_t t = order_ - 1;
    for (std::uint64_t r : factors_of_group_order_) {
        while (t % r == 0 && pow(x, t / r) == 1) {
            t /= r;
        }
    }
    return t;
}

std::vector<std::uint32_t> Field::coefficients(Elem x) const {
    std::vector<std::uint32_t> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    return out;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m_) {
        throw std::invalid_argument("from_coefficients: too many coefficients for " + name());
    }
    Elem result = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) {
            throw std::invalid_argument("from_coefficients: coefficient out of range");
        }
        result = result * p_ + coeffs[i];
    }
    return result;
}

FieldPtr make_field(std::uint32_t p, unsigned m) {
    if (!is_prime(p)) {
        throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw std::invalid_argument("make_field: extension degree must be positive");
    }
    std::uint64_t order = 0;
    try {
        order = checked_pow(p, m);
    } catch (const std::overflow_error&) {
        order = 0;
    }
    if (order == 0 || order > (std::uint64_t{1} << Field::kMaxOrderBits)) {
        throw FieldTooLargeError("make_field: GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                 ") exceeds the supported field size 2^" + std::to_string(Field::kMaxOrderBits));
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find({p, m});
    if (it != registry.end()) {
        return it->second;
    }
    FieldPtr field(new Field(p, m));
    registry.emplace(std::make_pair(p, m), field);
    return field;
}

FieldPtr make_field_of_order(std::uint64_t q) {
    auto [p, s] = prime_power_decomposition(q);
    if (p > 0xFFFFFFFFull) {
        throw FieldTooLargeError("make_field_of_order: characteristic too large");
    }
    return make_field(static_cast<std::uint32_t>(p), s);
}

FieldValue::FieldValue(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) {
        throw std::invalid_argument("FieldValue: null field");
    }
    if (!field_->contains(value_)) {
        throw std::invalid_argument("FieldValue: " + std::to_string(value_) + " is not an element of " +
                                    field_->name());
    }
}

const Field& FieldValue::same_field(const FieldValue& other) const {
    if (field_->p() != other.field_->p() || field_->m() != other.field_->m()) {
        throw std::invalid_argument("mixed-field operands: " + field_->name() + " and " + other.field_->name());
    }
    return *field_;
}

FieldValue FieldValue::operator+(const FieldValue& other) const {
    return {field_, same_field(other).add(value_, other.value_)};
}

FieldValue FieldValue::operator-(const FieldValue& other) const {
    return {field_, same_field(other).sub(value_, other.value_)};
}

FieldValue FieldValue::operator-() const { return {field_, field_->neg(value_)}; }

FieldValue FieldValue::operator*(const FieldValue& other) const {
    return {field_, same_field(other).mul(value_, other.value_)};
}

FieldValue FieldValue::operator/(const FieldValue& other) const {
    return {field_, same_field(other).div(value_, other.value_)};
}

FieldValue FieldValue::inv() const { return {field_, field_->inv(value_)}; }

FieldValue FieldValue::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldValue FieldValue::frobenius(std::uint64_t q) const { return {field_, field_->frobenius(value_, q)}; }

bool FieldValue::operator==(const FieldValue& other) const {
    return field_->p() == other.field_->p() && field_->m() == other.field_->m() && value_ == other.value_;
}

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a->p() != b->p() || a->m() != b->m()) {
        throw std::invalid_argument("mixed-field polynomials: " + a->name() + " and " + b->name());
    }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) {
        throw std::invalid_argument("Poly: null field");
    }
    for (Elem c : coeffs_) {
        if (!field_->contains(c)) {
            throw std::invalid_argument("Poly: coefficient outside " + field_->name());
        }
    }
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Elem> c(n + 1, 0);
    c[0] = field->neg(1);
    c[n] = field->add(c[n], 1);
    return Poly(std::move(field), std::move(c));
}

Poly Poly::linear(FieldPtr field, Elem root) {
    Elem c0 = field->neg(root);
    return Poly(std::move(field), {c0, 1});
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    }
    return acc;
}

Poly Poly::operator*(const Poly& other) const {
    require_same_field(field_, other.field_);
    if (is_zero() || other.is_zero()) {
        return zero(field_);
    }
    std::vector<Elem> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator+(const Poly& other) const {
    require_same_field(field_, other.field_);
    std::vector<Elem> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = field_->add(coeff(i), other.coeff(i));
    }
    return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same_field(field_, divisor.field_);
    if (divisor.is_zero()) {
        throw std::domain_error("Poly::divmod: division by the zero polynomial");
    }
    std::vector<Elem> rem = coeffs_;
    const std::size_t dsize = divisor.coeffs_.size();
    if (rem.size() < dsize) {
        return {zero(field_), *this};
    }
    std::vector<Elem> quot(rem.size() - dsize + 1, 0);
    const Elem lead_inv = field_->inv(divisor.coeffs_.back());
    for (std::size_t d = rem.size(); d-- >= dsize;) {
        const Elem c = field_->mul(rem[d], lead_inv);
        if (c == 0) {
            continue;
        }
        const std::size_t shift = d + 1 - dsize;
        quot[shift] = c;
        for (std::size_t i = 0; i < dsize; ++i) {
            rem[shift + i] = field_->sub(rem[shift + i], field_->mul(c, divisor.coeffs_[i]));
        }
        if (d == 0) {
            break;
        }
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

bool Poly::operator==(const Poly& other) const {
    return field_->p() == other.field_->p() && field_->m() == other.field_->m() && coeffs_ == other.coeffs_;
}

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->p() != ext_->p() || ext_->m() % base_->m() != 0) {
        throw std::invalid_argument("Embedding: " + base_->name() + " is not a subfield of " + ext_->name());
    }
    const std::uint64_t q = base_->order();
    image_.resize(q);
    if (base_->m() == 1) {
        for (Elem c = 0; c < q; ++c) {
            image_[c] = c;
        }
    } else {
        std::vector<Elem> modulus_in_ext(base_->modulus().begin(), base_->modulus().end());
        Poly minimal(ext_, modulus_in_ext);
        const Elem w = ext_->pow(ext_->generator(), (ext_->order() - 1) / (q - 1));
        std::optional<Elem> root;
        Elem y = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i, y = ext_->mul(y, w)) {
            if (minimal.eval(y) == 0 && (!root || y < *root)) {
                root = y;
            }
        }
        if (!root) {
            throw ConsistencyError("Embedding: base modulus has no root in " + ext_->name());
        }
        for (Elem c = 0; c < q; ++c) {
            Elem acc = 0;
            Elem power = 1;
            for (std::uint32_t digit : base_->coefficients(c)) {
                acc = ext_->add(acc, ext_->mul(ext_->from_integer(digit), power));
                power = ext_->mul(power, *root);
            }
            image_[c] = acc;
        }
    }
    for (Elem c = 0; c < q; ++c) {
        preimage_.emplace(image_[c], c);
    }
}

std::optional<Elem> Embedding::project(Elem y) const {
    auto it = preimage_.find(y);
    if (it == preimage_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Poly Embedding::embed(const Poly& poly) const {
    require_same_field(poly.field(), base_);
    std::vector<Elem> out;
    out.reserve(poly.coefficients().size());
    for (Elem c : poly.coefficients()) {
        out.push_back(image_[c]);
    }
    return Poly(ext_, std::move(out));
}

NthRoot primitive_nth_root(std::uint64_t n, const FieldPtr& base) {
    const std::uint64_t q = base->order();
    if (n == 0 || std::gcd(n, q) != 1) {
        throw std::invalid_argument("primitive_nth_root: need n >= 1 with gcd(n, q) = 1, got n = " +
                                    std::to_string(n) + ", q = " + std::to_string(q));
    }
    const std::uint64_t t = multiplicative_order_mod(q % n, n);
    if (t > Field::kMaxOrderBits) {
        throw FieldTooLargeError("primitive_nth_root: splitting field GF(" + std::to_string(q) + "^" +
                                 std::to_string(t) + ") exceeds the supported field size");
    }
    FieldPtr ext = make_field(base->p(), base->m() * static_cast<unsigned>(t));
    const Elem alpha = ext->pow(ext->generator(), (ext->order() - 1) / n);
    if (ext->multiplicative_order(alpha) != n) {
        throw ConsistencyError("primitive_nth_root: alpha does not have order " + std::to_string(n));
    }
    return {base, std::move(ext), static_cast<unsigned>(t), alpha};
}

NthRoot primitive_nth_root(std::uint64_t n, std::uint64_t base_order) {
    return primitive_nth_root(n, make_field_of_order(base_order));
}

Poly coerce_to_base(const Poly& poly, const Embedding& embedding) {
    require_same_field(poly.field(), embedding.ext());
    std::vector<Elem> out;
    out.reserve(poly.coefficients().size());
    for (Elem c : poly.coefficients()) {
        auto projected = embedding.project(c);
        if (!projected) {
            throw ConsistencyError("coerce_to_base: coefficient " + std::to_string(c) + " of a polynomial over " +
                                   embedding.ext()->name() + " is not in " + embedding.base()->name());
        }
        out.push_back(*projected);
    }
    return Poly(embedding.base(), std::move(out));
}

Poly coerce_to_base(const Poly& poly, const FieldPtr& base) { return coerce_to_base(poly, Embedding(base, poly.field())); }

}  // namespace qduadic
