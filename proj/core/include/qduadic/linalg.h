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
#ifndef QDUADIC_LINALG_H
#define QDUADIC_LINALG_H

#include <cstddef>
#include <span>
#include <vector>

#include "qduadic/galois.h"

namespace qduadic {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Elem> values);

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    /// M v^T for a vector of length cols().
    std::vector<Elem> apply(std::span<const Elem> v) const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const;

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of { x : m x^T = 0 }.
Matrix null_space(const Matrix& m);

/// True when both matrices have the same number of columns and span the same
/// row space.
bool same_row_space(const Matrix& a, const Matrix& b);

/// Entrywise x -> x^q; m must live over GF(q^2).
Matrix conjugate(const Matrix& m, std::uint64_t q);

}  // namespace qduadic

#endif  // QDUADIC_LINALG_H
