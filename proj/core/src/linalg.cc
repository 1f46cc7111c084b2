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

#include "qduadic/linalg.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qduadic {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
    Matrix out(std::move(field), 0, cols);
    for (const auto& r : rows) {
        out.append_row(r);
    }
    return out;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument("Matrix::append_row: row length mismatch");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.set(c, r, at(r, c));
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("Matrix::operator*: shape mismatch");
    }
    const Field& f = *field_;
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; ++c) {
                out.set(r, c, f.add(out.at(r, c), f.mul(a, other.at(k, c))));
            }
        }
    }
    return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("Matrix::apply: length mismatch");
    }
    const Field& f = *field_;
    std::vector<Elem> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Elem acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] != 0) {
                acc = f.add(acc, f.mul(at(r, c), v[c]));
            }
        }
        out[r] = acc;
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RowEchelon row_reduce(const Matrix& m) {
    const Field& f = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < a.rows() && a.at(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                Elem tmp = a.at(pivot, c);
                a.set(pivot, c, a.at(lead_row, c));
                a.set(lead_row, c, tmp);
            }
        }
        const Elem scale = f.inv(a.at(lead_row, col));
        for (std::size_t c = col; c < a.cols(); ++c) {
            a.set(lead_row, c, f.mul(a.at(lead_row, c), scale));
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row) {
                continue;
            }
            const Elem factor = a.at(r, col);
            if (factor == 0) {
                continue;
            }
            for (std::size_t c = col; c < a.cols(); ++c) {
                a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(lead_row, c))));
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    Matrix reduced(m.field(), 0, m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        reduced.append_row(a.row(r));
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix null_space(const Matrix& m) {
    const Field& f = *m.field();
    RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivots) {
        is_pivot[c] = true;
    }
    Matrix basis(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::fill(v.begin(), v.end(), 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = f.neg(ech.reduced.at(r, free_col));
        }
        basis.append_row(v);
    }
    return basis;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    RowEchelon ea = row_reduce(a);
    RowEchelon eb = row_reduce(b);
    return ea.pivots == eb.pivots && ea.reduced == eb.reduced;
}

Matrix conjugate(const Matrix& m, std::uint64_t q) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.set(r, c, m.field()->frobenius(m.at(r, c), q));
        }
    }
    return out;
}

}  // namespace qduadic
